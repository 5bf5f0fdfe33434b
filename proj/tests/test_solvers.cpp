#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sigdom/enumerate.hpp"
#include "sigdom/generators.hpp"
#include "sigdom/solvers.hpp"
#include "support/oracles.hpp"

using namespace sigdom;

TEST_CASE("is_valid_stdf matches the definition", "[solvers][stdf]") {
  const Graph c4 = cycle_graph(4);
  CHECK(is_valid_stdf(c4, SignedFunction::all_plus(4)));
  CHECK_FALSE(is_valid_stdf(c4, SignedFunction(4, 0b0001)));
  const Graph k4 = complete_graph(4);
  CHECK(is_valid_stdf(k4, SignedFunction(4, 0b1000)));
  // isolated vertex: no assignment is ever valid
  const Graph lonely = Graph::from_edge_list(3, {{0, 1}});
  CHECK_FALSE(is_valid_stdf(lonely, SignedFunction::all_plus(3)));
}

TEST_CASE("signed function bookkeeping", "[solvers][stdf]") {
  const SignedFunction f = SignedFunction::from_signs({1, -1, 1, -1, 1});
  CHECK(f.weight() == 1);
  CHECK(f.minus_set().to_vector() == std::vector<int>{1, 3});
  CHECK(f.sign(0) == 1);
  CHECK(f.sign(1) == -1);
  CHECK_THROWS_AS(SignedFunction::from_signs({1, 0}), malformed_input);
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const SignedFunction g(n, rng() & mask_below(n));
    CHECK(((g.weight() % 2) + 2) % 2 == n % 2);
    CHECK(g.weight() == n - 2 * g.minus_set().size());
  }
}

TEST_CASE("gamma_st on cycles equals n", "[solvers][gamma_st]") {
  for (int n = 3; n <= 9; ++n) {
    const Graph c = cycle_graph(n);
    const InvariantResult fast = gamma_st(c);
    const InvariantResult slow = oracle_gamma_st(c);
    REQUIRE(fast.feasible);
    CHECK(fast.value == n);
    CHECK(slow.value == n);
  }
}

TEST_CASE("gamma_st on even complete graphs equals 2", "[solvers][gamma_st]") {
  for (int k = 2; k <= 5; ++k) {
    const InvariantResult r = gamma_st(complete_graph(2 * k));
    REQUIRE(r.feasible);
    CHECK(r.value == 2);
  }
}

TEST_CASE("gamma_st witness is a valid minimum STDF", "[solvers][gamma_st]") {
  for (const Graph& g : {complete_graph(6), cycle_graph(7), heawood_graph(),
                         testsupport::petersen_graph(), star_graph(5)}) {
    const InvariantResult r = gamma_st(g);
    REQUIRE(r.feasible);
    const SignedFunction* f = r.function_witness();
    REQUIRE(f != nullptr);
    CHECK(is_valid_stdf(g, *f));
    CHECK(f->weight() == r.value);
  }
}

TEST_CASE("gamma_st is infeasible exactly when a vertex is isolated", "[solvers][gamma_st]") {
  CHECK_FALSE(gamma_st(Graph::from_edge_list(1, {})).feasible);
  CHECK_FALSE(gamma_st(Graph::from_edge_list(4, {{0, 1}, {1, 2}})).feasible);
  CHECK(gamma_st(path_graph(2)).feasible);
  CHECK_FALSE(oracle_gamma_st(Graph::from_edge_list(1, {})).feasible);
}

TEST_CASE("heawood graph: gamma_st 10 and gamma_2t 12 by exhaustive oracle", "[solvers][heawood]") {
  const Graph h = heawood_graph();
  const InvariantResult slow = oracle_gamma_st(h);
  REQUIRE(slow.feasible);
  CHECK(slow.value == 10);
  CHECK(gamma_st(h).value == 10);
  const auto oracle_d2 = testsupport::min_subset(
      h, [&](std::uint64_t m) { return testsupport::subset_is_tuple_tds(h, m, 2); });
  REQUIRE(oracle_d2.has_value());
  CHECK(oracle_d2->size() == 12);
  CHECK(gamma_tuple_t(h, 2).value == 12);
}

TEST_CASE("petersen graph gamma_st by exhaustive oracle", "[solvers][oracle]") {
  const Graph p = testsupport::petersen_graph();
  CHECK(oracle_gamma_st(p).value == 6);
  CHECK(gamma_st(p).value == 6);
  CHECK(rho_open(p).value == 2);
}

TEST_CASE("solver agrees with the sign-assignment oracle on small classes", "[solvers][oracle]") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const InvariantResult fast = gamma_st(g);
      const InvariantResult slow = oracle_gamma_st(g);
      REQUIRE(fast.feasible == slow.feasible);
      if (fast.feasible) CHECK(fast.value == slow.value);
    }
  }
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 60; ++iter) {
    const Graph g = testsupport::random_graph(2 + static_cast<int>(rng() % 9), rng, 0.4);
    const InvariantResult fast = gamma_st(g);
    const InvariantResult slow = oracle_gamma_st(g);
    REQUIRE(fast.feasible == slow.feasible);
    if (fast.feasible) CHECK(fast.value == slow.value);
  }
}

TEST_CASE("gamma_t values", "[solvers][gamma_t]") {
  for (int n = 2; n <= 7; ++n) CHECK(gamma_t(complete_graph(n)).value == 2);
  CHECK(gamma_t(path_graph(2)).value == 2);
  const Graph c6 = cycle_graph(6);
  const auto oracle = testsupport::min_subset(
      c6, [&](std::uint64_t m) { return testsupport::subset_is_tuple_tds(c6, m, 1); });
  CHECK(oracle->size() == 4);
  CHECK(gamma_t(c6).value == 4);
  CHECK_FALSE(gamma_t(Graph::from_edge_list(2, {})).feasible);
}

TEST_CASE("tuple total domination", "[solvers][tuple]") {
  const Graph k4 = complete_graph(4);
  const auto oracle = testsupport::min_subset(
      k4, [&](std::uint64_t m) { return testsupport::subset_is_tuple_tds(k4, m, 2); });
  CHECK(oracle->size() == 3);
  CHECK(gamma_tuple_t(k4, 2).value == 3);
  // k = 1 reduces to total domination
  for (int n = 3; n <= 8; ++n)
    CHECK(gamma_tuple_t(cycle_graph(n), 1).value == gamma_t(cycle_graph(n)).value);
  CHECK_FALSE(gamma_tuple_t(cycle_graph(5), 3).feasible);
  CHECK_THROWS_AS(gamma_tuple_t(complete_graph(3), 0), malformed_input);
}

TEST_CASE("tuple witness validates", "[solvers][tuple]") {
  for (int k = 1; k <= 3; ++k) {
    const Graph g = complete_graph(5);
    const InvariantResult r = gamma_tuple_t(g, k);
    REQUIRE(r.feasible);
    REQUIRE(r.set_witness() != nullptr);
    CHECK(is_tuple_tds(g, *r.set_witness(), k));
    CHECK(r.set_witness()->size() == r.value);
  }
}

TEST_CASE("open packing", "[solvers][packing]") {
  for (int k = 2; k <= 5; ++k) CHECK(rho_open(complete_graph(2 * k)).value == 1);
  CHECK(rho_open(path_graph(4)).value == 2);
  CHECK(rho_open(Graph::from_edge_list(1, {})).value == 1);
  // solver route (caps) against the pairwise-disjointness definition
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const auto oracle = testsupport::max_subset(
          g, [&](std::uint64_t m) { return testsupport::subset_is_open_packing(g, m); });
      const InvariantResult r = rho_open(g);
      CHECK(r.value == oracle.size());
      REQUIRE(r.set_witness() != nullptr);
      CHECK(is_open_packing(g, *r.set_witness()));
    }
  }
}

TEST_CASE("limited packing (closed)", "[solvers][packing]") {
  for (int n = 2; n <= 6; ++n) CHECK(limited_packing(complete_graph(n), 1).value == 1);
  const Graph c6 = cycle_graph(6);
  CHECK(limited_packing(c6, 1).value == 2);
  const auto oracle = testsupport::max_subset(
      c6, [&](std::uint64_t m) { return testsupport::subset_is_limited_packing(c6, m, 1); });
  CHECK(oracle.size() == 2);
  // a cap above the maximum closed degree never binds
  for (const Graph& g : enumerate_connected_graphs(5))
    CHECK(limited_packing(g, degree_profile(g).max_degree + 1).value == g.order());
  CHECK_THROWS_AS(limited_packing(c6, 0), malformed_input);
}

TEST_CASE("total limited packing", "[solvers][packing]") {
  const Graph k4 = complete_graph(4);
  CHECK(total_limited_packing(k4, 1).value == 1);
  CHECK(total_limited_packing(k4, 1).value == rho_open(k4).value);
  CHECK(total_limited_packing(cycle_graph(6), 1).value == 2);
  CHECK_THROWS_AS(total_limited_packing(k4, -1), malformed_input);
}

TEST_CASE("total limited packing ceiling identity", "[solvers][packing][property]") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const int Delta = degree_profile(g).max_degree;
      CHECK(total_limited_packing(g, Delta + 1).value == g.order());
      for (int k = 0; k <= Delta + 1; ++k) {
        const bool full = total_limited_packing(g, k).value == g.order();
        CHECK(full == (k >= Delta));
      }
    }
  }
}

TEST_CASE("packing and tuple ladders on small classes", "[solvers][property]") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const DegreeProfile p = degree_profile(g);
      for (int k = 0; k <= p.max_degree; ++k) {
        const int cur = total_limited_packing(g, k).value;
        if (cur < g.order()) CHECK(total_limited_packing(g, k + 1).value >= cur + 1);
        CHECK(total_limited_packing(g, k + 1).value >= cur);
      }
      for (int k = 2; k <= p.min_degree; ++k)
        CHECK(gamma_tuple_t(g, k).value >= gamma_tuple_t(g, k - 1).value + 1);
    }
  }
}

TEST_CASE("gamma_st equals the packing reformulation", "[solvers][gamma_st][property]") {
  // independent route: max |L| with |N(v) & L| <= ceil(deg/2) - 1 by subset search
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const auto best = testsupport::max_subset(g, [&](std::uint64_t m) {
        for (int v = 0; v < g.order(); ++v)
          if (std::popcount(g.adjacency_bits(v) & m) > (g.degree(v) + 1) / 2 - 1) return false;
        return true;
      });
      CHECK(gamma_st(g).value == g.order() - 2 * best.size());
    }
  }
}

TEST_CASE("definitional predicates on hand examples", "[solvers][predicates]") {
  const Graph k4 = complete_graph(4);
  CHECK(is_tlp(k4, VertexSet(4), 0));
  CHECK(is_tuple_tds(k4, VertexSet::full_set(4), 3));
  CHECK_FALSE(is_tuple_tds(k4, VertexSet::full_set(4), 4));
  CHECK_FALSE(is_open_packing(k4, VertexSet::of(4, {0, 1})));
  // members of a total dominating set need dominating neighbors too
  CHECK_FALSE(is_tds(k4, VertexSet::of(4, {0})));
  CHECK(is_tds(k4, VertexSet::of(4, {0, 1})));
  CHECK(is_limited_packing(k4, VertexSet::of(4, {2}), 1));
  // full set is a k-tuple TDS exactly when delta >= k
  for (const Graph& g : enumerate_connected_graphs(4))
    for (int k = 1; k <= 3; ++k)
      CHECK(is_tuple_tds(g, VertexSet::full_set(4), k) ==
            (degree_profile(g).min_degree >= k));
}

TEST_CASE("oracle gamma_st basics", "[solvers][oracle]") {
  CHECK(oracle_gamma_st(cycle_graph(5)).value == 5);
  CHECK(oracle_gamma_st(complete_graph(4)).value == 2);
  CHECK_THROWS_AS(oracle_gamma_st(Graph::from_edge_list(25, {{0, 1}})), unsupported_size);
}

TEST_CASE("partition statistics", "[solvers][partition]") {
  const Graph c4 = cycle_graph(4);
  const PartitionStats all_plus = partition_stats(c4, SignedFunction::all_plus(4));
  CHECK(all_plus.plus_count == 4);
  CHECK(all_plus.edges_plus == 4);
  CHECK(all_plus.cross == 0);
  CHECK(all_plus.edges_minus == 0);

  const Graph k4 = complete_graph(4);
  const PartitionStats one_minus = partition_stats(k4, SignedFunction(4, 0b0001));
  CHECK(one_minus.minus_count == 1);
  CHECK(one_minus.edges_minus == 0);
  CHECK(one_minus.cross == 3);
  CHECK(one_minus.edges_plus == 3);

  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = testsupport::random_graph(n, rng);
    const SignedFunction f(n, rng() & mask_below(n));
    const PartitionStats st = partition_stats(g, f);
    CHECK(st.edges_plus + st.edges_minus + st.cross == g.size());
    CHECK(st.plus_count + st.minus_count == n);
    CHECK(st.plus_even + st.plus_odd == st.plus_count);
    CHECK(st.minus_even + st.minus_odd == st.minus_count);
  }
}

TEST_CASE("solver results are deterministic", "[solvers][determinism]") {
  const Graph g = testsupport::petersen_graph();
  const InvariantResult a = gamma_st(g);
  const InvariantResult b = gamma_st(g);
  CHECK(a.function_witness()->minus_bits() == b.function_witness()->minus_bits());
  const InvariantResult ta = gamma_tuple_t(g, 2);
  const InvariantResult tb = gamma_tuple_t(g, 2);
  CHECK(ta.set_witness()->bits() == tb.set_witness()->bits());
}
