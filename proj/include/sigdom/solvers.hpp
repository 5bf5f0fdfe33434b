#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <variant>
#include <vector>

#include "sigdom/graph.hpp"

namespace sigdom {

/// Total assignment V -> {-1,+1}; the minus side is stored as a bit mask.
class SignedFunction {
 public:
  SignedFunction() = default;

  SignedFunction(int n, std::uint64_t minus_bits) : n_(n), minus_(minus_bits) {
    if (n < 0 || n > kMaxVertices) throw unsupported_size("SignedFunction: order out of range");
    if (minus_bits & ~mask_below(n))
      throw malformed_input("SignedFunction: minus vertex outside range");
  }

  static SignedFunction all_plus(int n) { return SignedFunction(n, 0); }

  static SignedFunction from_signs(const std::vector<int>& signs) {
    std::uint64_t minus = 0;
    for (std::size_t v = 0; v < signs.size(); ++v) {
      if (signs[v] == -1)
        minus |= std::uint64_t{1} << v;
      else if (signs[v] != 1)
        throw malformed_input("SignedFunction: signs must be +1 or -1");
    }
    return SignedFunction(static_cast<int>(signs.size()), minus);
  }

  int order() const { return n_; }
  std::uint64_t minus_bits() const { return minus_; }
  int sign(int v) const { return ((minus_ >> v) & 1) ? -1 : 1; }
  VertexSet minus_set() const { return VertexSet(n_, minus_); }
  VertexSet plus_set() const { return VertexSet(n_, ~minus_ & mask_below(n_)); }

  // weight = n - 2|V_-|, so weight == n (mod 2) always
  int weight() const { return n_ - 2 * std::popcount(minus_); }

  int neighborhood_sum(const Graph& g, int v) const {
    const std::uint64_t nb = g.adjacency_bits(v);
    return std::popcount(nb) - 2 * std::popcount(nb & minus_);
  }

  std::vector<int> to_signs() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = sign(v);
    return out;
  }

  friend bool operator==(const SignedFunction&, const SignedFunction&) = default;

 private:
  int n_ = 0;
  std::uint64_t minus_ = 0;
};

struct InvariantResult {
  std::string name;
  bool feasible = false;
  int value = 0;  // meaningful only when feasible
  std::variant<std::monostate, VertexSet, SignedFunction> witness;

  const VertexSet* set_witness() const { return std::get_if<VertexSet>(&witness); }
  const SignedFunction* function_witness() const { return std::get_if<SignedFunction>(&witness); }
};

/// Vertex cap applied by the branch-and-bound solvers; SIGDOM_MAX_N lowers
/// (or restores) it within 1..64.
inline int solver_vertex_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("SIGDOM_MAX_N")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1 && v <= kMaxVertices) return static_cast<int>(v);
    }
    return kMaxVertices;
  }();
  return cap;
}

// ---- definitional predicates -------------------------------------------

inline bool is_valid_stdf(const Graph& g, const SignedFunction& f) {
  if (f.order() != g.order()) throw malformed_input("is_valid_stdf: order mismatch");
  for (int v = 0; v < g.order(); ++v)
    if (f.neighborhood_sum(g, v) < 1) return false;
  return true;
}

inline bool is_open_packing(const Graph& g, const VertexSet& b) {
  const auto vs = b.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacency_bits(vs[i]) & g.adjacency_bits(vs[j])) return false;
  return true;
}

inline bool is_tlp(const Graph& g, const VertexSet& l, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (std::popcount(g.adjacency_bits(v) & l.bits()) > k) return false;
  return true;
}

inline bool is_limited_packing(const Graph& g, const VertexSet& b, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (std::popcount(g.closed_bits(v) & b.bits()) > k) return false;
  return true;
}

inline bool is_tuple_tds(const Graph& g, const VertexSet& s, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (std::popcount(g.adjacency_bits(v) & s.bits()) < k) return false;
  return true;
}

inline bool is_tds(const Graph& g, const VertexSet& s) { return is_tuple_tds(g, s, 1); }

// ---- shared branch-and-bound skeleton -----------------------------------

namespace detail {

// Branch order shared by all solvers: descending degree, ties by index.
inline std::vector<int> branch_order(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Maximizes |S| subject to |cons(v) & S| <= cap(v) for every v, where
// cons(v) is a symmetric constraint mask (open or closed neighborhoods).
// A vertex blocked now stays blocked (counts only grow), so the bound
// |S| + #(undecided unblocked) is valid. First optimum found wins.
struct MaxSetSolver {
  const Graph& g;
  const std::vector<std::uint64_t>& cons;
  const std::vector<int>& cap;
  std::vector<int> order;
  std::vector<int> cnt;
  std::uint64_t best_set = 0;
  int best_size = -1;

  MaxSetSolver(const Graph& g_, const std::vector<std::uint64_t>& cons_,
               const std::vector<int>& cap_)
      : g(g_), cons(cons_), cap(cap_), order(branch_order(g_)),
        cnt(static_cast<std::size_t>(g_.order()), 0) {}

  std::uint64_t blocked_mask() const {
    std::uint64_t blocked = 0;
    for (int v = 0; v < g.order(); ++v)
      if (cnt[static_cast<std::size_t>(v)] >= cap[static_cast<std::size_t>(v)])
        blocked |= cons[static_cast<std::size_t>(v)];
    return blocked;
  }

  void run() {
    dfs(0, 0, 0);
  }

  void dfs(std::size_t pos, std::uint64_t chosen, int chosen_size) {
    if (chosen_size > best_size) {
      best_size = chosen_size;
      best_set = chosen;
    }
    if (pos == order.size()) return;
    std::uint64_t undecided = 0;
    for (std::size_t i = pos; i < order.size(); ++i)
      undecided |= std::uint64_t{1} << order[i];
    const std::uint64_t blocked = blocked_mask();
    if (chosen_size + std::popcount(undecided & ~blocked) <= best_size) return;
    const int u = order[pos];
    if (!((blocked >> u) & 1)) {
      for (std::uint64_t b = cons[static_cast<std::size_t>(u)]; b != 0; b &= b - 1)
        ++cnt[static_cast<std::size_t>(std::countr_zero(b))];
      dfs(pos + 1, chosen | (std::uint64_t{1} << u), chosen_size + 1);
      for (std::uint64_t b = cons[static_cast<std::size_t>(u)]; b != 0; b &= b - 1)
        --cnt[static_cast<std::size_t>(std::countr_zero(b))];
    }
    dfs(pos + 1, chosen, chosen_size);
  }
};

// Minimizes |S| subject to |N(v) & S| >= need(v) for every v. Feasible iff
// need(v) <= deg(v) everywhere. Prunes on per-vertex deficits that the
// undecided vertices can no longer cover.
struct MinSetSolver {
  const Graph& g;
  const std::vector<int>& need;
  std::vector<int> order;
  std::vector<int> cnt;
  int total_deficit = 0;
  int max_degree = 1;
  std::uint64_t best_set = 0;
  int best_size = -1;

  MinSetSolver(const Graph& g_, const std::vector<int>& need_)
      : g(g_), need(need_), order(branch_order(g_)),
        cnt(static_cast<std::size_t>(g_.order()), 0) {
    for (int v = 0; v < g.order(); ++v) {
      total_deficit += need[static_cast<std::size_t>(v)];
      max_degree = std::max(max_degree, g.degree(v));
    }
  }

  void run() { dfs(0, 0, 0, mask_below(g.order())); }

  void dfs(std::size_t pos, std::uint64_t chosen, int chosen_size, std::uint64_t undecided) {
    if (total_deficit == 0) {
      if (best_size < 0 || chosen_size < best_size) {
        best_size = chosen_size;
        best_set = chosen;
      }
      return;  // adding more vertices cannot improve this branch
    }
    if (pos == order.size()) return;
    if (best_size >= 0 && chosen_size + (total_deficit + max_degree - 1) / max_degree >= best_size)
      return;
    for (int v = 0; v < g.order(); ++v) {
      const int deficit = need[static_cast<std::size_t>(v)] - cnt[static_cast<std::size_t>(v)];
      if (deficit > std::popcount(g.adjacency_bits(v) & undecided)) return;
    }
    const int u = order[pos];
    const std::uint64_t rest = undecided & ~(std::uint64_t{1} << u);
    // include u
    int delta = 0;
    for (std::uint64_t b = g.adjacency_bits(u); b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (cnt[static_cast<std::size_t>(v)] < need[static_cast<std::size_t>(v)]) ++delta;
      ++cnt[static_cast<std::size_t>(v)];
    }
    total_deficit -= delta;
    dfs(pos + 1, chosen | (std::uint64_t{1} << u), chosen_size + 1, rest);
    total_deficit += delta;
    for (std::uint64_t b = g.adjacency_bits(u); b != 0; b &= b - 1)
      --cnt[static_cast<std::size_t>(std::countr_zero(b))];
    // exclude u
    dfs(pos + 1, chosen, chosen_size, rest);
  }
};

inline void check_solver_size(const Graph& g, const char* who) {
  if (g.order() > solver_vertex_cap())
    throw unsupported_size(std::string(who) + ": graph exceeds solver vertex cap");
}

inline InvariantResult max_set_result(const Graph& g, const std::vector<std::uint64_t>& cons,
                                      const std::vector<int>& cap, std::string name) {
  MaxSetSolver solver(g, cons, cap);
  solver.run();
  InvariantResult r;
  r.name = std::move(name);
  r.feasible = true;
  r.value = solver.best_size;
  r.witness = VertexSet(g.order(), solver.best_set);
  return r;
}

}  // namespace detail

// ---- invariant solvers ----------------------------------------------------

/// Largest k-total limited packing: |N(v) & L| <= k for all v (k >= 0).
inline InvariantResult total_limited_packing(const Graph& g, int k) {
  if (k < 0) throw malformed_input("total_limited_packing: k >= 0 required");
  detail::check_solver_size(g, "total_limited_packing");
  std::vector<std::uint64_t> cons;
  for (int v = 0; v < g.order(); ++v) cons.push_back(g.adjacency_bits(v));
  const std::vector<int> cap(static_cast<std::size_t>(g.order()), k);
  return detail::max_set_result(g, cons, cap, "L_" + std::to_string(k) + "t");
}

/// Largest open packing (pairwise disjoint open neighborhoods).
inline InvariantResult rho_open(const Graph& g) {
  detail::check_solver_size(g, "rho_open");
  InvariantResult r = total_limited_packing(g, 1);
  r.name = "rho_o";
  return r;
}

/// Largest k-limited packing: |N[v] & B| <= k for all v (closed version).
inline InvariantResult limited_packing(const Graph& g, int k) {
  if (k < 1) throw malformed_input("limited_packing: k >= 1 required");
  detail::check_solver_size(g, "limited_packing");
  std::vector<std::uint64_t> cons;
  for (int v = 0; v < g.order(); ++v) cons.push_back(g.closed_bits(v));
  const std::vector<int> cap(static_cast<std::size_t>(g.order()), k);
  return detail::max_set_result(g, cons, cap, "L_" + std::to_string(k));
}

/// Smallest k-tuple total dominating set; infeasible when delta < k.
inline InvariantResult gamma_tuple_t(const Graph& g, int k) {
  if (k < 1) throw malformed_input("gamma_tuple_t: k >= 1 required");
  detail::check_solver_size(g, "gamma_tuple_t");
  InvariantResult r;
  r.name = k == 1 ? "gamma_t" : "gamma_" + std::to_string(k) + "t";
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < k) return r;  // infeasible
  const std::vector<int> need(static_cast<std::size_t>(g.order()), k);
  detail::MinSetSolver solver(g, need);
  solver.run();
  r.feasible = true;
  r.value = solver.best_size;
  r.witness = VertexSet(g.order(), solver.best_set);
  return r;
}

inline InvariantResult gamma_t(const Graph& g) { return gamma_tuple_t(g, 1); }

/// Signed total domination number with a minimum STDF witness.
///
/// f is a valid STDF iff |N(v) & V_-| <= ceil(deg(v)/2) - 1 for every v, so
/// the solver maximizes |V_-| under those caps and reports n - 2|V_-|.
inline InvariantResult gamma_st(const Graph& g) {
  detail::check_solver_size(g, "gamma_st");
  InvariantResult r;
  r.name = "gamma_st";
  std::vector<std::uint64_t> cons;
  std::vector<int> cap;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d == 0) return r;  // isolated vertex: no STDF exists
    cons.push_back(g.adjacency_bits(v));
    cap.push_back((d + 1) / 2 - 1);
  }
  detail::MaxSetSolver solver(g, cons, cap);
  solver.run();
  r.feasible = true;
  r.value = g.order() - 2 * solver.best_size;
  r.witness = SignedFunction(g.order(), solver.best_set);
  return r;
}

/// Brute-force gamma_st over all 2^n sign assignments (n <= 24); the
/// independent cross-check for the branch-and-bound path.
inline InvariantResult oracle_gamma_st(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw unsupported_size("oracle_gamma_st: n <= 24 required");
  InvariantResult r;
  r.name = "gamma_st";
  std::vector<std::uint64_t> nb;
  std::vector<int> cap;
  for (int v = 0; v < n; ++v) {
    nb.push_back(g.adjacency_bits(v));
    cap.push_back((g.degree(v) + 1) / 2 - 1);
  }
  int best_neg = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t minus = 0; minus < (std::uint64_t{1} << n); ++minus) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      ok = std::popcount(nb[static_cast<std::size_t>(v)] & minus) <=
           cap[static_cast<std::size_t>(v)];
    if (ok && std::popcount(minus) > best_neg) {
      best_neg = std::popcount(minus);
      best_mask = minus;
    }
  }
  if (best_neg < 0) return r;
  r.feasible = true;
  r.value = n - 2 * best_neg;
  r.witness = SignedFunction(n, best_mask);
  return r;
}

// ---- partition statistics -------------------------------------------------

struct PartitionStats {
  int plus_count = 0, minus_count = 0;
  int plus_even = 0, plus_odd = 0, minus_even = 0, minus_odd = 0;
  int edges_plus = 0, edges_minus = 0, cross = 0;
};

inline PartitionStats partition_stats(const Graph& g, const SignedFunction& f) {
  if (f.order() != g.order()) throw malformed_input("partition_stats: order mismatch");
  PartitionStats st;
  const std::uint64_t minus = f.minus_bits();
  const std::uint64_t plus = ~minus & g.vertex_mask();
  st.minus_count = std::popcount(minus);
  st.plus_count = std::popcount(plus);
  int plus_deg_in_plus = 0, minus_deg_in_minus = 0, cross_from_plus = 0;
  for (int v = 0; v < g.order(); ++v) {
    const bool even = g.degree(v) % 2 == 0;
    if ((minus >> v) & 1) {
      (even ? st.minus_even : st.minus_odd)++;
      minus_deg_in_minus += std::popcount(g.adjacency_bits(v) & minus);
    } else {
      (even ? st.plus_even : st.plus_odd)++;
      plus_deg_in_plus += std::popcount(g.adjacency_bits(v) & plus);
      cross_from_plus += std::popcount(g.adjacency_bits(v) & minus);
    }
  }
  st.edges_plus = plus_deg_in_plus / 2;
  st.edges_minus = minus_deg_in_minus / 2;
  st.cross = cross_from_plus;
  return st;
}

}  // namespace sigdom
