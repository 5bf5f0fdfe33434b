#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "sigdom/graph.hpp"
#include "sigdom/isomorphism.hpp"

namespace sigdom {

namespace detail {

// Tree from a rooted level sequence (root level 0): the parent of vertex i
// is the most recent vertex one level up.
inline Graph tree_from_levels(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<std::pair<int, int>> edges;
  std::vector<int> last_at_level(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int lvl = levels[static_cast<std::size_t>(i)];
    if (lvl > 0) edges.emplace_back(last_at_level[static_cast<std::size_t>(lvl - 1)], i);
    last_at_level[static_cast<std::size_t>(lvl)] = i;
  }
  return Graph::from_edge_list(n, edges);
}

// Canonical level sequence of (t, root): subtree sequences sorted descending.
inline std::vector<int> canonical_levels(const Graph& t, int v, int parent, int depth) {
  std::vector<std::vector<int>> subs;
  for (std::uint64_t b = t.adjacency_bits(v); b != 0; b &= b - 1) {
    const int u = std::countr_zero(b);
    if (u != parent) subs.push_back(canonical_levels(t, u, v, depth + 1));
  }
  std::sort(subs.begin(), subs.end(), std::greater<>());
  std::vector<int> out{depth};
  for (const auto& s : subs) out.insert(out.end(), s.begin(), s.end());
  return out;
}

inline std::vector<int> tree_centroids(const Graph& t) {
  const int n = t.order();
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  std::vector<int> order;
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  // iterative DFS from 0
  std::vector<int> stack{0};
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (std::uint64_t b = t.adjacency_bits(v); b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        parent[static_cast<std::size_t>(u)] = v;
        stack.push_back(u);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[static_cast<std::size_t>(*it)] >= 0)
      size[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] +=
          size[static_cast<std::size_t>(*it)];
  int best = n;
  std::vector<int> cents;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[static_cast<std::size_t>(v)];
    for (std::uint64_t b = t.adjacency_bits(v); b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      if (parent[static_cast<std::size_t>(u)] == v)
        heaviest = std::max(heaviest, size[static_cast<std::size_t>(u)]);
    }
    if (heaviest < best) {
      best = heaviest;
      cents.assign(1, v);
    } else if (heaviest == best) {
      cents.push_back(v);
    }
  }
  return cents;
}

}  // namespace detail

/// Complete isomorphism invariant for free trees: the canonical level
/// sequence rooted at the centroid (the larger of the two rootings when the
/// tree is bicentral).
inline std::vector<int> tree_canonical_key(const Graph& t) {
  const std::vector<int> cents = detail::tree_centroids(t);
  std::vector<int> best;
  for (int c : cents) {
    std::vector<int> seq = detail::canonical_levels(t, c, -1, 0);
    if (best.empty() || seq > best) best = std::move(seq);
  }
  return best;
}

/// One representative per isomorphism class of free trees on n vertices.
///
/// Rooted trees are generated as canonical level sequences by successor
/// iteration (path down to star); a rooted tree survives the free-tree
/// filter when its root is a centroid and, for bicentral trees, when its
/// rooting is the lexicographically larger of the two centroid rootings.
inline std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 16) throw unsupported_size("enumerate_trees: 1 <= n <= 16 required");
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph::from_edge_list(1, {}));
    return out;
  }
  std::vector<int> levels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) levels[static_cast<std::size_t>(i)] = i;
  while (true) {
    const Graph t = detail::tree_from_levels(levels);
    const std::vector<int> cents = detail::tree_centroids(t);
    const bool root_is_centroid = std::find(cents.begin(), cents.end(), 0) != cents.end();
    if (root_is_centroid) {
      bool emit = true;
      if (cents.size() == 2) {
        const int other = cents[0] == 0 ? cents[1] : cents[0];
        emit = detail::canonical_levels(t, 0, -1, 0) >= detail::canonical_levels(t, other, -1, 0);
      }
      if (emit) out.push_back(t);
    }
    // successor: rightmost level >= 2 drops by one step and the tail repeats
    // the block ending just before it
    int p = n - 1;
    while (p >= 0 && levels[static_cast<std::size_t>(p)] < 2) --p;
    if (p < 0) break;
    int q = p - 1;
    while (levels[static_cast<std::size_t>(q)] != levels[static_cast<std::size_t>(p)] - 1) --q;
    for (int i = p; i < n; ++i)
      levels[static_cast<std::size_t>(i)] = levels[static_cast<std::size_t>(i - (p - q))];
  }
  return out;
}

namespace detail {

// Bucketed dedup: fingerprint narrows candidates, exact isomorphism decides.
class IsoClassCollector {
 public:
  // Returns true if g is new; representatives keep insertion order.
  bool insert(const Graph& g) {
    auto& bucket = buckets_[iso_fingerprint(g)];
    for (int idx : bucket)
      if (is_isomorphic(reps_[static_cast<std::size_t>(idx)], g)) return false;
    bucket.push_back(static_cast<int>(reps_.size()));
    reps_.push_back(g);
    return true;
  }

  std::vector<Graph> take() { return std::move(reps_); }

 private:
  std::map<std::vector<long long>, std::vector<int>> buckets_;
  std::vector<Graph> reps_;
};

}  // namespace detail

/// One representative per isomorphism class of connected graphs on n
/// vertices, by labeled enumeration over all edge masks plus dedup.
inline std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 7) throw unsupported_size("enumerate_connected_graphs: 1 <= n <= 7 required");
  const int slots = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slot_edges;
  slot_edges.reserve(static_cast<std::size_t>(slots));
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) slot_edges.emplace_back(row, col);

  detail::IsoClassCollector collector;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
    std::fill(adj.begin(), adj.end(), 0);
    for (std::uint64_t b = mask; b != 0; b &= b - 1) {
      const auto [u, v] = slot_edges[static_cast<std::size_t>(std::countr_zero(b))];
      adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    // every class has a labeling with non-increasing degrees, so other
    // labelings can be skipped before paying for dedup
    bool sorted_degrees = true;
    for (int v = 0; v + 1 < n && sorted_degrees; ++v)
      sorted_degrees = std::popcount(adj[static_cast<std::size_t>(v)]) >=
                       std::popcount(adj[static_cast<std::size_t>(v + 1)]);
    if (!sorted_degrees) continue;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1)
        next |= adj[static_cast<std::size_t>(std::countr_zero(b))];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != mask_below(n)) continue;
    collector.insert(Graph::from_adjacency(adj));
  }
  return collector.take();
}

namespace detail {

struct CubicGen {
  int n;
  std::vector<std::uint64_t> adj;
  std::vector<int> deg;
  int touched;  // vertices 0..touched-1 have at least one incident edge chosen
  IsoClassCollector collector;

  void add_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }

  void remove_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    --deg[static_cast<std::size_t>(u)];
    --deg[static_cast<std::size_t>(v)];
  }

  // Completes the smallest touched vertex that still needs neighbors.
  // Fresh vertices may only be used as a block of the smallest unused
  // labels, which fixes labelings up to the order edges are discovered and
  // keeps every emitted graph connected.
  void grow() {
    int v = -1;
    for (int i = 0; i < touched; ++i)
      if (deg[static_cast<std::size_t>(i)] < 3) {
        v = i;
        break;
      }
    if (v < 0) {
      if (touched == n) collector.insert(Graph::from_adjacency(adj));
      return;  // touched < n means unreachable leftover vertices
    }
    const int need = 3 - deg[static_cast<std::size_t>(v)];
    std::vector<int> elig;
    for (int u = v + 1; u < touched; ++u)
      if (deg[static_cast<std::size_t>(u)] < 3 && !((adj[static_cast<std::size_t>(v)] >> u) & 1))
        elig.push_back(u);
    const int max_fresh = n - touched;
    std::vector<int> chosen;
    pick(v, need, 0, elig, max_fresh, chosen);
  }

  void pick(int v, int need, std::size_t from, const std::vector<int>& elig, int max_fresh,
            std::vector<int>& chosen) {
    const int still = need - static_cast<int>(chosen.size());
    if (still == 0) {
      grow();
      return;
    }
    if (still <= max_fresh) {
      // finish with a block of fresh vertices
      const int base = touched;
      for (int j = 0; j < still; ++j) add_edge(v, base + j);
      touched += still;
      grow();
      touched -= still;
      for (int j = 0; j < still; ++j) remove_edge(v, base + j);
    }
    for (std::size_t i = from; i < elig.size(); ++i) {
      const int u = elig[i];
      if (deg[static_cast<std::size_t>(u)] >= 3) continue;
      add_edge(v, u);
      chosen.push_back(u);
      pick(v, need, i + 1, elig, max_fresh, chosen);
      chosen.pop_back();
      remove_edge(v, u);
    }
  }
};

}  // namespace detail

/// One representative per isomorphism class of connected 3-regular graphs on
/// n vertices. Odd n (and n < 4) have none.
inline std::vector<Graph> enumerate_connected_cubic(int n) {
  if (n < 1 || n > 12) throw unsupported_size("enumerate_connected_cubic: 1 <= n <= 12 required");
  if (n < 4 || n % 2 != 0) return {};
  detail::CubicGen gen;
  gen.n = n;
  gen.adj.assign(static_cast<std::size_t>(n), 0);
  gen.deg.assign(static_cast<std::size_t>(n), 0);
  gen.touched = 1;
  gen.grow();
  return gen.collector.take();
}

}  // namespace sigdom
