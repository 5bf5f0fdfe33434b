#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigdom {

// Adjacency rows are single 64-bit words; everything downstream relies on it.
inline constexpr int kMaxVertices = 64;

struct malformed_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct unsupported_size : std::length_error {
  using std::length_error::length_error;
};

struct precondition_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline constexpr std::uint64_t mask_below(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Subset of the vertices {0..n-1} of a graph of order n, stored as a bit mask.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe, std::uint64_t bits = 0)
      : n_(universe), bits_(bits) {
    if (universe < 0 || universe > kMaxVertices)
      throw unsupported_size("VertexSet: universe out of range");
    if (bits & ~mask_below(universe))
      throw malformed_input("VertexSet: member outside universe");
  }

  static VertexSet empty_set(int universe) { return VertexSet(universe); }

  static VertexSet full_set(int universe) {
    return VertexSet(universe, mask_below(universe));
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.add(v);
    return s;
  }

  int universe() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int v) const { return v >= 0 && v < n_ && (bits_ >> v) & 1; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  void add(int v) {
    if (v < 0 || v >= n_) throw malformed_input("VertexSet: vertex outside universe");
    bits_ |= std::uint64_t{1} << v;
  }

  void remove(int v) {
    if (v < 0 || v >= n_) throw malformed_input("VertexSet: vertex outside universe");
    bits_ &= ~(std::uint64_t{1} << v);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t s = bits_; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Invariants held after every constructor: adjacency is symmetric and
/// irreflexive, and the cached edge count equals half the degree sum.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list; duplicate edges collapse.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > kMaxVertices)
      throw unsupported_size("Graph: vertex count out of range (0..64)");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw malformed_input("Graph: edge endpoint out of range");
      if (u == v) throw malformed_input("Graph: self-loop");
      adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return Graph(std::move(adj));
  }

  /// Adopts prebuilt adjacency rows, validating symmetry and irreflexivity.
  static Graph from_adjacency(std::vector<std::uint64_t> adj) {
    const int n = static_cast<int>(adj.size());
    if (n > kMaxVertices) throw unsupported_size("Graph: vertex count out of range (0..64)");
    for (int v = 0; v < n; ++v) {
      if (adj[static_cast<std::size_t>(v)] & ~mask_below(n))
        throw malformed_input("Graph: adjacency bit outside vertex range");
      if ((adj[static_cast<std::size_t>(v)] >> v) & 1)
        throw malformed_input("Graph: self-loop");
      for (std::uint64_t s = adj[static_cast<std::size_t>(v)]; s != 0; s &= s - 1) {
        const int u = std::countr_zero(s);
        if (!((adj[static_cast<std::size_t>(u)] >> v) & 1))
          throw malformed_input("Graph: adjacency not symmetric");
      }
    }
    return Graph(std::move(adj));
  }

  int order() const { return n_; }
  int size() const { return m_; }

  std::uint64_t adjacency_bits(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::uint64_t closed_bits(int v) const {
    return adj_[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v);
  }
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

  bool adjacent(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
  }

  std::uint64_t vertex_mask() const { return mask_below(n_); }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for (std::uint64_t s = adj_[static_cast<std::size_t>(u)] & ~mask_below(u + 1); s != 0;
           s &= s - 1)
        out.emplace_back(u, std::countr_zero(s));
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {
    n_ = static_cast<int>(adj_.size());
    int degsum = 0;
    for (int v = 0; v < n_; ++v) degsum += degree(v);
    m_ = degsum / 2;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  int even_count = 0;  // vertices of even degree
  int odd_count = 0;
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  if (g.order() == 0) return p;
  p.min_degree = kMaxVertices + 1;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    p.min_degree = d < p.min_degree ? d : p.min_degree;
    p.max_degree = d > p.max_degree ? d : p.max_degree;
    (d % 2 == 0 ? p.even_count : p.odd_count)++;
  }
  return p;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t s = frontier; s != 0; s &= s - 1)
      next |= g.adjacency_bits(std::countr_zero(s));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertex_mask();
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1;
}

/// Length of a shortest cycle; nullopt when the graph is acyclic.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      for (std::uint64_t s = g.adjacency_bits(u); s != 0; s &= s - 1) {
        const int w = std::countr_zero(s);
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue[tail++] = w;
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          // Non-tree edge closes a cycle through the root of length <= d(u)+d(w)+1;
          // the minimum over all roots is exact.
          const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  if (best == 0) return std::nullopt;
  return best;
}

}  // namespace sigdom
