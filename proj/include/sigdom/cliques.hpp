#pragma once

#include <bit>
#include <cstdint>

#include "sigdom/graph.hpp"

namespace sigdom {

namespace detail {

// Searches for a clique of size target inside cand; cur vertices are already chosen.
inline bool clique_search(const Graph& g, std::uint64_t cand, int cur, int target) {
  if (cur >= target) return true;
  while (cand != 0) {
    if (cur + std::popcount(cand) < target) return false;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (clique_search(g, cand & g.adjacency_bits(v), cur + 1, target)) return true;
  }
  return false;
}

}  // namespace detail

inline bool has_clique(const Graph& g, int p) {
  if (p <= 0) return true;
  if (p == 1) return g.order() >= 1;
  return detail::clique_search(g, g.vertex_mask(), 0, p);
}

/// True when g contains no complete subgraph on p vertices.
inline bool is_k_clique_free(const Graph& g, int p) { return !has_clique(g, p); }

inline int clique_number(const Graph& g) {
  int w = 0;
  while (w < g.order() && has_clique(g, w + 1)) ++w;
  return w;
}

}  // namespace sigdom
