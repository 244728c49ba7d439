#include <doctest.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "chibind/patterns.hpp"
#include "support/brute.hpp"

using namespace chibind;

namespace {

std::map<std::string, Graph> load_fixture() {
  std::ifstream f(CHIBIND_TEST_DATA "/patterns.txt");
  REQUIRE(f);
  std::map<std::string, Graph> out;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string name, second;
    is >> name >> second;
    if (second == "complement") {
      std::string base;
      is >> base;
      out[name] = brute::complement(out.at(base));
      continue;
    }
    int n = std::stoi(second);
    std::vector<Edge> e;
    std::string tok;
    while (is >> tok) {
      auto dash = tok.find('-');
      e.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
    }
    out[name] = Graph::from_edges(n, e);
  }
  return out;
}

}  // namespace

TEST_CASE("catalog matches the fixture file") {
  auto fixture = load_fixture();
  CHECK(fixture.size() == kAllPatterns.size());
  for (auto p : kAllPatterns) {
    CAPTURE(to_string(p));
    REQUIRE(fixture.count(std::string(to_string(p))));
    CHECK(pattern_graph(p) == fixture.at(std::string(to_string(p))));
    CHECK(pattern_from_string(to_string(p)) == p);
  }
  CHECK_FALSE(pattern_from_string("NOPE").has_value());
}

TEST_CASE("catalog sizes") {
  CHECK(pattern_graph(PatternName::P2_P3).order() == 5);
  CHECK(pattern_graph(PatternName::P2_P3).size() == 3);
  CHECK(pattern_graph(PatternName::CO_P2_P3).size() == 7);
  CHECK(pattern_graph(PatternName::C4).order() == 4);
  CHECK(pattern_graph(PatternName::H1).order() == 7);
  CHECK(pattern_graph(PatternName::K2_K1).order() == 3);
}

TEST_CASE("detector agrees with subset and permutation enumeration") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 120; ++it) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = brute::random_graph(n, 0.2 + 0.15 * (it % 5), rng);
    for (auto p : kAllPatterns) {
      CAPTURE(to_string(p));
      auto e = find_induced(g, p);
      CHECK(e.has_value() == brute::contains_induced(g, pattern_graph(p)));
      if (e) CHECK(embedding_valid(g, *e));
    }
  }
}

TEST_CASE("embeddings are lex-first and all_induced lists every one") {
  Graph c5 = cycle_graph(5);
  auto e = find_induced(c5, PatternName::P2_P3);
  CHECK_FALSE(e.has_value());
  Graph p6 = path_graph(6);
  auto w = find_induced(p6, PatternName::P2_P3);
  REQUIRE(w);
  CHECK(w->map == std::vector<int>{0, 1, 3, 4, 5});
  // Each induced C4 of K_{2,3} appears under all 8 labellings.
  Graph k23 = pattern_graph(PatternName::K23);
  CHECK(all_induced(k23, PatternName::C4).size() == 3 * 8);
  for (const auto& m : all_induced(k23, PatternName::C4)) CHECK(embedding_valid(k23, m));
}

TEST_CASE("embedding validity rejects wrong maps") {
  Graph p6 = path_graph(6);
  CHECK_FALSE(embedding_valid(p6, {PatternName::P2_P3, {0, 1, 2, 3, 4}}));
  CHECK_FALSE(embedding_valid(p6, {PatternName::P2_P3, {0, 1, 3, 4}}));
  CHECK_FALSE(embedding_valid(p6, {PatternName::P2_P3, {0, 0, 3, 4, 5}}));
  CHECK(embedding_valid(p6, {PatternName::P2_P3, {1, 0, 3, 4, 5}}));
}

TEST_CASE("class membership") {
  CHECK(in_class(Graph(5)));
  CHECK(in_class(complete_graph(8)));
  CHECK(in_class(cycle_graph(5)));
  auto r = in_class(path_graph(6));
  CHECK_FALSE(r.free);
  REQUIRE(r.witness);
  CHECK(r.witness->pattern == PatternName::P2_P3);
  CHECK(embedding_valid(path_graph(6), *r.witness));
  auto co = in_class(complement(path_graph(6)));
  REQUIRE(co.witness);
  CHECK(co.witness->pattern == PatternName::CO_P2_P3);
  // Any graph on 4 vertices is in the class.
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<Edge> e;
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if (mask >> bit & 1) e.push_back({u, v});
    CHECK(in_class(Graph::from_edges(4, e)));
  }
}

TEST_CASE("freeness for several patterns reports the first hit in order") {
  Graph k23 = pattern_graph(PatternName::K23);
  auto r = is_free(k23, {PatternName::BANNER, PatternName::C4, PatternName::K23});
  CHECK_FALSE(r.free);
  CHECK(r.witness->pattern == PatternName::C4);
  CHECK(is_free(k23, {PatternName::BANNER, PatternName::P6}).free);
}

TEST_CASE("classify a vertex set") {
  Graph p6 = path_graph(6);
  std::vector<int> s{0, 1, 3, 4, 5};
  std::vector<PatternName> cand{PatternName::C4, PatternName::P2_P3};
  auto e = classify_set(p6, s, cand);
  REQUIRE(e);
  CHECK(e->pattern == PatternName::P2_P3);
  std::vector<int> t{0, 1, 2, 3, 4};
  CHECK_FALSE(classify_set(p6, t, cand).has_value());
}
