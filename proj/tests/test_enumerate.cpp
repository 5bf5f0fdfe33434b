#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sigdom/enumerate.hpp"
#include "sigdom/graph.hpp"
#include "sigdom/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace sigdom;

TEST_CASE("free tree counts match the Otter recurrence", "[enumerate][trees]") {
  // the recurrence is a closed-form oracle, independent of the generator
  const auto counts = testsupport::free_tree_counts(16);
  for (int n = 1; n <= 16; ++n) {
    const auto trees = enumerate_trees(n);
    INFO("n = " << n);
    CHECK(static_cast<long long>(trees.size()) == counts[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("free tree counts match brute force over Pruefer sequences", "[enumerate][trees]") {
  for (int n = 2; n <= 9; ++n) {
    INFO("n = " << n);
    CHECK(static_cast<long long>(enumerate_trees(n).size()) ==
          testsupport::count_free_trees_by_pruefer(n));
  }
}

TEST_CASE("enumerated trees are trees and pairwise non-isomorphic", "[enumerate][trees]") {
  for (int n : {4, 7, 10}) {
    std::set<std::vector<int>> keys;
    for (const Graph& t : enumerate_trees(n)) {
      REQUIRE(is_tree(t));
      REQUIRE(t.order() == n);
      keys.insert(tree_canonical_key(t));
    }
    CHECK(keys.size() == enumerate_trees(n).size());
  }
}

TEST_CASE("small tree enumerations by hand", "[enumerate][trees]") {
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(4).size() == 2);   // P4 and the star
  CHECK(enumerate_trees(7).size() == 11);
  CHECK_THROWS_AS(enumerate_trees(0), unsupported_size);
  CHECK_THROWS_AS(enumerate_trees(17), unsupported_size);
}

TEST_CASE("connected graph counts certified by labeled counting", "[enumerate][connected]") {
  // Two independent routes must meet: the labeled-connected recurrence and
  // the enumerator's classes weighted by n!/|Aut|.
  const auto labeled = testsupport::labeled_connected_counts(7);
  long long factorial = 1;
  for (int n = 1; n <= 7; ++n) {
    factorial *= n;
    const auto classes = enumerate_connected_graphs(n);
    long long weighted = 0;
    for (const Graph& g : classes) {
      REQUIRE(is_connected(g));
      REQUIRE(g.order() == n);
      weighted += factorial / count_automorphisms(g);
    }
    INFO("n = " << n);
    CHECK(weighted == labeled[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("connected graph class counts", "[enumerate][connected]") {
  CHECK(enumerate_connected_graphs(1).size() == 1);
  CHECK(enumerate_connected_graphs(3).size() == 2);  // P3 and K3
  CHECK(enumerate_connected_graphs(4).size() == 6);
  CHECK(enumerate_connected_graphs(7).size() == 853);
  CHECK_THROWS_AS(enumerate_connected_graphs(8), unsupported_size);
}

TEST_CASE("connected enumeration emits P3 before K3", "[enumerate][connected]") {
  const auto graphs = enumerate_connected_graphs(3);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0].size() == 2);
  CHECK(graphs[1].size() == 3);
}

TEST_CASE("cubic enumeration certified by labeled counting", "[enumerate][cubic]") {
  for (int n : {4, 6, 8, 10}) {
    const auto classes = enumerate_connected_cubic(n);
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    long long weighted = 0;
    for (const Graph& g : classes) {
      REQUIRE(is_connected(g));
      const DegreeProfile p = degree_profile(g);
      REQUIRE(p.min_degree == 3);
      REQUIRE(p.max_degree == 3);
      weighted += factorial / count_automorphisms(g);
    }
    INFO("n = " << n);
    CHECK(weighted == testsupport::labeled_connected_cubic_count(n));
  }
}

TEST_CASE("cubic class counts", "[enumerate][cubic]") {
  CHECK(enumerate_connected_cubic(4).size() == 1);
  CHECK(enumerate_connected_cubic(6).size() == 2);
  CHECK(enumerate_connected_cubic(8).size() == 5);
  CHECK(enumerate_connected_cubic(10).size() == 19);
  CHECK(enumerate_connected_cubic(5).empty());
  CHECK(enumerate_connected_cubic(2).empty());
  CHECK_THROWS_AS(enumerate_connected_cubic(14), unsupported_size);
}

TEST_CASE("cubic enumeration agrees with filtering the connected classes", "[enumerate][cubic]") {
  for (int n : {4, 6}) {
    long long cubic_among_connected = 0;
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const DegreeProfile p = degree_profile(g);
      if (p.min_degree == 3 && p.max_degree == 3) ++cubic_among_connected;
    }
    CHECK(cubic_among_connected ==
          static_cast<long long>(enumerate_connected_cubic(n).size()));
  }
}
