#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sigdom/graph.hpp"
#include "sigdom/solvers.hpp"

namespace sigdom {

/// Support structure of a tree: supports, leaves, per-support leaf lists and
/// the deterministic choice L' of one leaf per support of degree != 2.
struct TreeProfile {
  VertexSet supports;
  VertexSet leaves;
  VertexSet chosen_leaves;                 // L'
  std::vector<std::vector<int>> leaf_map;  // leaf_map[v] nonempty iff v is a support
  int support_count = 0;                   // s
  int degree_two_supports = 0;             // s'
};

inline TreeProfile tree_profile(const Graph& t) {
  if (!is_tree(t) || t.order() < 2)
    throw precondition_error("tree_profile: tree of order >= 2 required");
  const int n = t.order();
  TreeProfile p;
  p.supports = VertexSet(n);
  p.leaves = VertexSet(n);
  p.chosen_leaves = VertexSet(n);
  p.leaf_map.assign(static_cast<std::size_t>(n), {});
  for (int v = 0; v < n; ++v)
    if (t.degree(v) == 1) p.leaves.add(v);
  for (int v = 0; v < n; ++v) {
    for (std::uint64_t b = t.adjacency_bits(v) & p.leaves.bits(); b != 0; b &= b - 1)
      p.leaf_map[static_cast<std::size_t>(v)].push_back(std::countr_zero(b));
    if (!p.leaf_map[static_cast<std::size_t>(v)].empty()) {
      p.supports.add(v);
      ++p.support_count;
      if (t.degree(v) == 2) {
        ++p.degree_two_supports;
      } else {
        // smallest-index leaf of each support of degree != 2
        p.chosen_leaves.add(p.leaf_map[static_cast<std::size_t>(v)].front());
      }
    }
  }
  return p;
}

/// STDF putting -1 exactly on L'. Valid with weight n - 2(s - s') for every
/// tree of order >= 3; the two-vertex tree degenerates (both endpoints are
/// degree-one supports), so it gets the all-plus function instead.
inline SignedFunction tree_stdf(const Graph& t) {
  if (!is_tree(t) || t.order() < 2)
    throw precondition_error("tree_stdf: tree of order >= 2 required");
  if (t.order() == 2) return SignedFunction::all_plus(2);
  return SignedFunction(t.order(), tree_profile(t).chosen_leaves.bits());
}

struct OmegaViolation {
  char condition;  // 'a' or 'b'
  int vertex;
};

struct OmegaVerdict {
  bool member = false;
  std::vector<OmegaViolation> violations;
};

/// Decides membership in the tree family characterizing equality of the
/// support bound: (a) supports with >= 2 leaves have degree <= 4, and
/// (b) every internal non-support vertex is adjacent to a support or to a
/// vertex of degree two.
inline OmegaVerdict omega_membership(const Graph& t) {
  if (!is_tree(t) || t.order() < 2)
    throw precondition_error("omega_membership: tree of order >= 2 required");
  const TreeProfile p = tree_profile(t);
  OmegaVerdict verdict;
  for (int v = 0; v < t.order(); ++v) {
    if (p.supports.contains(v) && p.leaf_map[static_cast<std::size_t>(v)].size() >= 2 &&
        t.degree(v) > 4)
      verdict.violations.push_back({'a', v});
  }
  for (int v = 0; v < t.order(); ++v) {
    if (p.supports.contains(v) || p.leaves.contains(v)) continue;
    bool ok = false;
    for (std::uint64_t b = t.adjacency_bits(v); b != 0 && !ok; b &= b - 1) {
      const int u = std::countr_zero(b);
      ok = p.supports.contains(u) || t.degree(u) == 2;
    }
    if (!ok) verdict.violations.push_back({'b', v});
  }
  verdict.member = verdict.violations.empty();
  return verdict;
}

/// STDF that is -1 exactly on a floor((delta-1)/2)-total limited packing.
/// Validity is guaranteed for delta >= 3; for smaller delta the function is
/// still built as stated.
inline SignedFunction stdf_from_tlp(const Graph& g, const VertexSet& l) {
  const int k = (degree_profile(g).min_degree - 1) / 2;
  if (!is_tlp(g, l, k < 0 ? 0 : k))
    throw precondition_error("stdf_from_tlp: L is not a floor((delta-1)/2)-total limited packing");
  return SignedFunction(g.order(), l.bits());
}

/// Adds the smallest-index vertex outside a k-total limited packing; the
/// result is a (k+1)-total limited packing.
inline VertexSet extend_tlp(const Graph& g, const VertexSet& l, int k) {
  if (!is_tlp(g, l, k)) throw precondition_error("extend_tlp: L is not a k-total limited packing");
  const std::uint64_t outside = ~l.bits() & g.vertex_mask();
  if (outside == 0) throw precondition_error("extend_tlp: packing already covers every vertex");
  return VertexSet(g.order(), l.bits() | (outside & -outside));
}

/// Removes the smallest-index member of a k-tuple total dominating set
/// (k >= 2); the result is a (k-1)-tuple total dominating set.
inline VertexSet shrink_tuple_tds(const Graph& g, const VertexSet& d, int k) {
  if (k < 2) throw precondition_error("shrink_tuple_tds: k >= 2 required");
  if (d.empty()) throw precondition_error("shrink_tuple_tds: empty set");
  if (!is_tuple_tds(g, d, k))
    throw precondition_error("shrink_tuple_tds: D is not a k-tuple total dominating set");
  return VertexSet(g.order(), d.bits() & (d.bits() - 1));
}

/// STDF that is +1 exactly on a double total dominating set of a cubic
/// graph; weight is 2|D| - n.
inline SignedFunction stdf_from_double_tds(const Graph& g, const VertexSet& d) {
  const DegreeProfile p = degree_profile(g);
  if (g.order() == 0 || p.min_degree != 3 || p.max_degree != 3)
    throw precondition_error("stdf_from_double_tds: 3-regular graph required");
  if (!is_tuple_tds(g, d, 2))
    throw precondition_error("stdf_from_double_tds: D is not a double total dominating set");
  return SignedFunction(g.order(), ~d.bits() & g.vertex_mask());
}

/// V_+ of a valid STDF on a cubic graph is a double total dominating set of
/// size (n + weight)/2.
inline VertexSet double_tds_from_stdf(const Graph& g, const SignedFunction& f) {
  const DegreeProfile p = degree_profile(g);
  if (g.order() == 0 || p.min_degree != 3 || p.max_degree != 3)
    throw precondition_error("double_tds_from_stdf: 3-regular graph required");
  if (!is_valid_stdf(g, f)) throw precondition_error("double_tds_from_stdf: f is not a valid STDF");
  return f.plus_set();
}

}  // namespace sigdom
