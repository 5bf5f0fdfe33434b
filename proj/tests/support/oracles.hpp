#pragma once

// Test-only oracles, independent of the solver implementations they check:
// exhaustive subset search, classic counting recurrences and small random
// graph generation.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "sigdom/enumerate.hpp"
#include "sigdom/graph.hpp"

namespace testsupport {

using sigdom::Graph;
using sigdom::VertexSet;

// ---- exhaustive subset search ----------------------------------------------

/// Largest subset satisfying pred; first maximum in ascending mask order.
inline VertexSet max_subset(const Graph& g,
                            const std::function<bool(std::uint64_t)>& pred) {
  const int n = g.order();
  int best = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) > best && pred(mask)) {
      best = std::popcount(mask);
      best_mask = mask;
    }
  }
  return VertexSet(n, best_mask);
}

/// Smallest subset satisfying pred, or nullopt when none does.
inline std::optional<VertexSet> min_subset(const Graph& g,
                                           const std::function<bool(std::uint64_t)>& pred) {
  const int n = g.order();
  int best = n + 1;
  std::uint64_t best_mask = 0;
  bool found = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < best && pred(mask)) {
      best = std::popcount(mask);
      best_mask = mask;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  return VertexSet(n, best_mask);
}

inline bool subset_is_tlp(const Graph& g, std::uint64_t mask, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (std::popcount(g.adjacency_bits(v) & mask) > k) return false;
  return true;
}

inline bool subset_is_tuple_tds(const Graph& g, std::uint64_t mask, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (std::popcount(g.adjacency_bits(v) & mask) < k) return false;
  return true;
}

inline bool subset_is_limited_packing(const Graph& g, std::uint64_t mask, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (std::popcount(g.closed_bits(v) & mask) > k) return false;
  return true;
}

/// Open packing by the literal definition: pairwise disjoint open
/// neighborhoods.
inline bool subset_is_open_packing(const Graph& g, std::uint64_t mask) {
  std::vector<int> vs;
  for (std::uint64_t b = mask; b != 0; b &= b - 1) vs.push_back(std::countr_zero(b));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacency_bits(vs[i]) & g.adjacency_bits(vs[j])) return false;
  return true;
}

/// Validity by the literal definition: sum of signs over N(v) at least 1.
inline bool stdf_valid_by_definition(const Graph& g, std::uint64_t minus_mask) {
  for (int v = 0; v < g.order(); ++v) {
    int sum = 0;
    for (std::uint64_t b = g.adjacency_bits(v); b != 0; b &= b - 1)
      sum += ((minus_mask >> std::countr_zero(b)) & 1) ? -1 : 1;
    if (sum < 1) return false;
  }
  return true;
}

// ---- counting recurrences ---------------------------------------------------

/// Rooted tree counts r(1..nmax) via the divisor-sum recurrence.
inline std::vector<long long> rooted_tree_counts(int nmax) {
  std::vector<long long> r(static_cast<std::size_t>(nmax) + 1, 0);
  r[1] = 1;
  for (int n = 2; n <= nmax; ++n) {
    long long acc = 0;
    for (int k = 1; k <= n - 1; ++k) {
      long long s = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) s += static_cast<long long>(d) * r[static_cast<std::size_t>(d)];
      acc += s * r[static_cast<std::size_t>(n - k)];
    }
    r[static_cast<std::size_t>(n)] = acc / (n - 1);
  }
  return r;
}

/// Free tree counts via Otter's dissimilarity formula:
/// f(n) = r(n) - [sum_{i+j=n} r(i)r(j) - (n even ? r(n/2) : 0)] / 2.
inline std::vector<long long> free_tree_counts(int nmax) {
  const std::vector<long long> r = rooted_tree_counts(nmax);
  std::vector<long long> f(static_cast<std::size_t>(nmax) + 1, 0);
  f[1] = 1;
  for (int n = 2; n <= nmax; ++n) {
    long long conv = 0;
    for (int i = 1; i <= n - 1; ++i)
      conv += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(n - i)];
    if (n % 2 == 0) conv -= r[static_cast<std::size_t>(n / 2)];
    f[static_cast<std::size_t>(n)] = r[static_cast<std::size_t>(n)] - conv / 2;
  }
  return f;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// Labeled connected graph counts via the standard recurrence
/// C(n) = 2^binom(n,2) - sum_k binom(n-1,k-1) C(k) 2^binom(n-k,2).
inline std::vector<long long> labeled_connected_counts(int nmax) {
  std::vector<long long> c(static_cast<std::size_t>(nmax) + 1, 0);
  const auto all = [](int n) { return 1LL << (n * (n - 1) / 2); };
  for (int n = 1; n <= nmax; ++n) {
    long long acc = all(n);
    for (int k = 1; k <= n - 1; ++k)
      acc -= binomial(n - 1, k - 1) * c[static_cast<std::size_t>(k)] * all(n - k);
    c[static_cast<std::size_t>(n)] = acc;
  }
  return c;
}

/// Labeled graphs in which every vertex has degree exactly 3, by dynamic
/// programming on residual-degree counts: the distinguished vertex (one of
/// the highest residual class) picks its remaining neighbors from the pool.
inline long long labeled_cubic_count(int n) {
  std::map<std::tuple<int, int, int>, long long> memo;
  const std::function<long long(int, int, int)> f = [&](int c1, int c2, int c3) -> long long {
    if (c1 == 0 && c2 == 0 && c3 == 0) return 1;
    const auto key = std::tuple(c1, c2, c3);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    int need;
    if (c3 > 0) {
      need = 3;
      --c3;
    } else if (c2 > 0) {
      need = 2;
      --c2;
    } else {
      need = 1;
      --c1;
    }
    long long acc = 0;
    for (int k3 = 0; k3 <= std::min(need, c3); ++k3)
      for (int k2 = 0; k2 <= std::min(need - k3, c2); ++k2) {
        const int k1 = need - k3 - k2;
        if (k1 > c1) continue;
        acc += binomial(c3, k3) * binomial(c2, k2) * binomial(c1, k1) *
               f(c1 - k1 + k2, c2 - k2 + k3, c3 - k3);
      }
    memo[key] = acc;
    return acc;
  };
  return f(0, 0, n);
}

/// Labeled connected cubic counts: subtract splittings where the component
/// of a fixed vertex is a smaller cubic graph.
inline long long labeled_connected_cubic_count(int n) {
  std::vector<long long> conn(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 4; k <= n; ++k) {
    long long acc = labeled_cubic_count(k);
    for (int j = 4; j <= k - 4; ++j)
      acc -= binomial(k - 1, j - 1) * conn[static_cast<std::size_t>(j)] * labeled_cubic_count(k - j);
    conn[static_cast<std::size_t>(k)] = acc;
  }
  return conn[static_cast<std::size_t>(n)];
}

// ---- labeled tree oracle ----------------------------------------------------

/// Graph from a Pruefer sequence over n >= 2 vertices.
inline Graph tree_from_pruefer(int n, const std::vector<int>& code) {
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int v : code) ++deg[static_cast<std::size_t>(v)];
  std::vector<std::pair<int, int>> edges;
  std::uint64_t leaves = 0;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] == 1) leaves |= std::uint64_t{1} << v;
  for (int v : code) {
    const int leaf = std::countr_zero(leaves);
    leaves &= leaves - 1;
    edges.emplace_back(leaf, v);
    if (--deg[static_cast<std::size_t>(v)] == 1) leaves |= std::uint64_t{1} << v;
  }
  const int a = std::countr_zero(leaves);
  leaves &= leaves - 1;
  edges.emplace_back(a, std::countr_zero(leaves));
  return Graph::from_edge_list(n, edges);
}

/// Counts free trees on n vertices by brute force over all Pruefer
/// sequences, deduplicating with the canonical tree key.
inline long long count_free_trees_by_pruefer(int n) {
  if (n == 1 || n == 2) return 1;
  std::set<std::vector<int>> keys;
  std::vector<int> code(static_cast<std::size_t>(n) - 2, 0);
  while (true) {
    keys.insert(sigdom::tree_canonical_key(tree_from_pruefer(n, code)));
    int i = static_cast<int>(code.size()) - 1;
    while (i >= 0 && code[static_cast<std::size_t>(i)] == n - 1) {
      code[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++code[static_cast<std::size_t>(i)];
  }
  return static_cast<long long>(keys.size());
}

// ---- misc -------------------------------------------------------------------

inline Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

inline Graph petersen_graph() {
  return Graph::from_edge_list(10, {{0, 1},
                                    {1, 2},
                                    {2, 3},
                                    {3, 4},
                                    {4, 0},
                                    {0, 5},
                                    {1, 6},
                                    {2, 7},
                                    {3, 8},
                                    {4, 9},
                                    {5, 7},
                                    {7, 9},
                                    {9, 6},
                                    {6, 8},
                                    {8, 5}});
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (std::uint64_t b = g.adjacency_bits(v); b != 0; b &= b - 1) {
        const int u = std::countr_zero(b);
        if (color[static_cast<std::size_t>(u)] < 0) {
          color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(u);
        } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace testsupport
