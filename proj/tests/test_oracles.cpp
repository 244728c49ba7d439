#include <doctest.h>

#include <cstdlib>
#include <random>

#include "chibind/oracles.hpp"
#include "support/brute.hpp"

using namespace chibind;

TEST_CASE("clique and stability numbers agree with subset enumeration") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = brute::random_graph(n, 0.15 + 0.7 * (it % 5) / 4.0, rng);
    CHECK(clique_number(g) == brute::omega(g));
    CHECK(stability_number(g) == brute::alpha(g));
    VertexSet q = max_clique(g);
    CHECK(is_clique(g, q));
    CHECK(q.size() == brute::omega(g));
    CHECK(is_stable(g, max_stable_set(g)));
  }
}

TEST_CASE("max_clique returns the lexicographically smallest maximum clique") {
  // Triangles {0,3,4} and {1,2,5}; the first is lexicographically smaller.
  Graph g = Graph::from_edges(6, {{0, 3}, {0, 4}, {3, 4}, {1, 2}, {1, 5}, {2, 5}});
  CHECK(max_clique(g).members() == std::vector<int>{0, 3, 4});
  Graph c5 = cycle_graph(5);
  CHECK(max_clique(c5).members() == std::vector<int>{0, 1});
}

TEST_CASE("clique number within a subset") {
  Graph k4 = complete_graph(4);
  CHECK(clique_number(k4, VertexSet(4, {0, 2, 3})) == 3);
  CHECK(clique_number(k4, VertexSet(4)) == 0);
}

TEST_CASE("chromatic number agrees with plain backtracking") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 150; ++it) {
    int n = static_cast<int>(rng() % 11);
    Graph g = brute::random_graph(n, 0.2 + 0.6 * (it % 4) / 3.0, rng);
    auto r = chromatic_number(g);
    CHECK(r.chi == brute::chi(g));
    CHECK(is_proper_coloring(g, r.coloring));
    CHECK(count_colors(r.coloring) == r.chi);
  }
}

TEST_CASE("small chromatic numbers") {
  CHECK(chromatic_number(Graph(0)).chi == 0);
  CHECK(chromatic_number(Graph(3)).chi == 1);
  CHECK(chromatic_number(cycle_graph(5)).chi == 3);
  CHECK(chromatic_number(cycle_graph(6)).chi == 2);
  CHECK(chromatic_number(complete_graph(7)).chi == 7);
  CHECK(clique_cover(cycle_graph(5)).chi == 3);
  CHECK(clique_cover(complete_graph(4)).chi == 1);
}

TEST_CASE("matching size agrees with exhaustive branching") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 300; ++it) {
    int n = static_cast<int>(rng() % 13);
    Graph g = brute::random_graph(n, 0.1 + 0.4 * (it % 3), rng);
    auto m = max_matching(g);
    CHECK(static_cast<int>(m.size()) == brute::matching(g));
    std::vector<int> seen(n, 0);
    for (auto [u, v] : m) {
      CHECK(u < v);
      CHECK(g.adjacent(u, v));
      CHECK(++seen[u] == 1);
      CHECK(++seen[v] == 1);
    }
  }
}

TEST_CASE("matching needs blossoms") {
  // Two triangles joined by a path: greedy choices must be undone.
  Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
  CHECK(max_matching(g).size() == 4);
  CHECK(max_matching(cycle_graph(7)).size() == 3);
}

TEST_CASE("chi_alpha2 equals the exact solver when alpha <= 2") {
  std::mt19937_64 rng(14);
  int done = 0;
  while (done < 60) {
    int n = 2 + static_cast<int>(rng() % 10);
    Graph g = brute::random_graph(n, 0.75, rng);
    if (brute::alpha(g) > 2) continue;
    ++done;
    CHECK(chi_alpha2(g) == brute::chi(g));
    auto col = coloring_alpha2(g);
    CHECK(is_proper_coloring(g, col));
    CHECK(count_colors(col) == chi_alpha2(g));
  }
  CHECK_THROWS_AS(chi_alpha2(Graph(3)), std::domain_error);
}

TEST_CASE("exact stats") {
  auto s = exact_stats(cycle_graph(5));
  CHECK(s.omega == 2);
  CHECK(s.alpha == 2);
  CHECK(s.chi == 3);
  CHECK(s.theta == 3);
}

TEST_CASE("maximal cliques") {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  auto all = maximal_cliques(g, 1);
  CHECK(all.size() == 3);
  auto big = maximal_cliques(g, 3);
  REQUIRE(big.size() == 1);
  CHECK(big[0].members() == std::vector<int>{0, 1, 2});
  std::mt19937_64 rng(15);
  for (int it = 0; it < 50; ++it) {
    Graph h = brute::random_graph(10, 0.5, rng);
    int om = brute::omega(h);
    auto top = maximal_cliques(h, om);
    CHECK_FALSE(top.empty());
    for (const auto& q : top) CHECK(q.size() == om);
  }
}

TEST_CASE("exact search reports a timeout instead of guessing") {
  SolverLimits tight;
  tight.timeout = std::chrono::milliseconds(1);
  std::mt19937_64 rng(16);
  // G(120, 1/2) cannot be colored exactly within 1ms.
  Graph g = brute::random_graph(120, 0.5, rng);
  CHECK_THROWS_AS(chromatic_number(g, tight), InexactError);
}

TEST_CASE("timeout default comes from the environment") {
  setenv("CHI_BIND_TIMEOUT_MS", "2500", 1);
  CHECK(default_limits().timeout == std::chrono::milliseconds(2500));
  unsetenv("CHI_BIND_TIMEOUT_MS");
  CHECK(default_limits().timeout == std::chrono::milliseconds(120000));
}
