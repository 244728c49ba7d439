#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "chibind/c4_partition.hpp"
#include "chibind/graph_io.hpp"
#include "chibind/harness.hpp"
#include "support/brute.hpp"

using namespace chibind;

namespace {

std::string base_id(const std::string& id) {
  std::string s;
  for (char ch : id)
    if (ch == 'R' || (ch >= '0' && ch <= '9')) s += ch;
  return s;
}

// Block of v computed straight from its neighbors on the cycle.
std::string expected_block(const Graph& g, const std::array<int, 4>& c, int v) {
  int mask = 0;
  for (int i = 0; i < 4; ++i)
    if (g.adjacent(v, c[i])) mask |= 1 << i;
  switch (__builtin_popcount(mask)) {
    case 0: return "T";
    case 4: return "D";
    case 1: return "A" + std::to_string(__builtin_ctz(mask));
    case 2:
      if (mask == 0b0101) return "X0";
      if (mask == 0b1010) return "X1";
      for (int i = 0; i < 4; ++i)
        if (mask == ((1 << i) | (1 << ((i + 1) % 4)))) return "B" + std::to_string(i);
  }
  return "three";
}

std::string actual_block(const C4Partition& p, int v) {
  for (int i = 0; i < 4; ++i) {
    if (p.a[i].contains(v)) return "A" + std::to_string(i);
    if (p.b[i].contains(v)) return "B" + std::to_string(i);
  }
  for (int j = 0; j < 2; ++j)
    if (p.x[j].contains(v)) return "X" + std::to_string(j);
  if (p.d.contains(v)) return "D";
  if (p.t.contains(v)) return "T";
  return "none";
}

struct Mutant {
  std::string property;
  Graph g;
  std::array<int, 4> cycle;
  bool ignore = false;
};

std::vector<Mutant> load_mutants() {
  std::ifstream f(CHIBIND_TEST_DATA "/r_mutants.txt");
  REQUIRE(f);
  std::vector<Mutant> out;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    Mutant m;
    std::string g6, cyc;
    int ignore = 0;
    is >> m.property >> g6 >> cyc >> ignore;
    m.g = decode_graph6(g6);
    std::replace(cyc.begin(), cyc.end(), ',', ' ');
    std::istringstream cs(cyc);
    for (int& c : m.cycle) cs >> c;
    m.ignore = ignore;
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("blocks by trace") {
  Graph k23 = pattern_graph(PatternName::K23);
  auto p = build_partition(k23, std::array<int, 4>{0, 1, 2, 3});
  CHECK(p.x[0].members() == std::vector<int>{4});
  CHECK(p.cycle().members() == std::vector<int>{0, 1, 2, 3});

  Graph banner = pattern_graph(PatternName::BANNER);
  auto q = build_partition(banner, std::array<int, 4>{0, 1, 2, 3});
  CHECK(q.a[0].members() == std::vector<int>{4});
  CHECK(q.a_all().size() == 1);
  CHECK(q.b_all().empty());
  CHECK(q.x_all().empty());

  Graph w = join(cycle_graph(4), Graph(1));
  CHECK(build_partition(w, std::array<int, 4>{0, 1, 2, 3}).d.members() == std::vector<int>{4});
  Graph plus = disjoint_union(cycle_graph(4), Graph(1));
  CHECK(build_partition(plus, std::array<int, 4>{0, 1, 2, 3}).t.members() == std::vector<int>{4});
}

TEST_CASE("partition blocks match the traces on random graphs") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    Graph g = brute::random_graph(9, 0.5, rng);
    for (const auto& emb : distinct_c4s(g)) {
      std::array<int, 4> c{emb.map[0], emb.map[1], emb.map[2], emb.map[3]};
      bool three = false;
      for (int v = 0; v < g.order(); ++v)
        if (std::find(c.begin(), c.end(), v) == c.end()) three |= expected_block(g, c, v) == "three";
      if (three) {
        CHECK_THROWS_AS(build_partition(g, c), ThreeNeighborError);
        continue;
      }
      auto p = build_partition(g, c);
      ++checked;
      for (int v = 0; v < g.order(); ++v)
        if (std::find(c.begin(), c.end(), v) == c.end()) CHECK(actual_block(p, v) == expected_block(g, c, v));
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("a vertex with three cycle neighbors yields a forbidden witness") {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 0}, {4, 1}, {4, 2}});
  try {
    build_partition(g, std::array<int, 4>{0, 1, 2, 3});
    FAIL("expected ThreeNeighborError");
  } catch (const ThreeNeighborError& e) {
    CHECK(e.vertex() == 4);
    REQUIRE(e.witness());
    CHECK(e.witness()->pattern == PatternName::CO_P2_P3);
    CHECK(embedding_valid(g, *e.witness()));
  }
}

TEST_CASE("partition input checks") {
  Graph c5 = cycle_graph(5);
  CHECK_THROWS(build_partition(c5, std::array<int, 4>{0, 1, 2, 3}));
  Graph c4 = cycle_graph(4);
  CHECK_THROWS(build_partition(c4, std::array<int, 4>{0, 1, 2, 2}));
}

TEST_CASE("distinct induced 4-cycles") {
  CHECK(distinct_c4s(cycle_graph(4)).size() == 1);
  CHECK(distinct_c4s(pattern_graph(PatternName::K23)).size() == 3);
  CHECK(distinct_c4s(cycle_graph(5)).empty());
  for (const auto& e : distinct_c4s(pattern_graph(PatternName::K23))) CHECK(embedding_valid(pattern_graph(PatternName::K23), e));
}

TEST_CASE("report labels and rendering") {
  PropertyReport r;
  r.property_id = "R10";
  r.index = 1;
  r.index2 = 0;
  CHECK(r.label() == "R10[i=1,j=0]");
  r.property_id = "R9a";
  r.index = 0;
  r.index2 = -1;
  CHECK(r.label() == "R9a[j=0]");
  r.property_id = "R1";
  r.status = PropertyStatus::violated;
  r.witness = {0, 1, 5, 6, 7};
  r.witness_pattern = PatternName::P2_P3;
  CHECK(render_report(r) == "R1[i=0]: violated witness=0,1,5,6,7 (P2_P3)");
  CHECK(to_string(PropertyStatus::not_applicable) == "not-applicable");
}

TEST_CASE("every property instance is reported once per cycle") {
  auto p = build_partition(cycle_graph(4), std::array<int, 4>{0, 1, 2, 3});
  auto reps = check_properties(cycle_graph(4), p);
  std::map<std::string, int> count;
  for (const auto& r : reps) {
    count[base_id(r.property_id)]++;
    CHECK(r.status == PropertyStatus::holds);
  }
  CHECK(count.size() == 15);
}

TEST_CASE("mutant fixtures violate exactly their property, with a verified witness") {
  auto mutants = load_mutants();
  REQUIRE(mutants.size() == 15);
  std::set<std::string> covered;
  for (const auto& m : mutants) {
    CAPTURE(m.property);
    // Gated mutants may be in the class; they only need to contain the gate pattern.
    if (m.ignore) CHECK(find_induced(m.g, PatternName::CO_BANNER).has_value());
    else CHECK_FALSE(in_class(m.g).free);
    CheckOptions opt;
    opt.ignore_conditions = m.ignore;
    auto reps = check_properties(m.g, build_partition(m.g, m.cycle), opt);
    std::set<std::string> bad;
    for (const auto& r : reps) {
      if (r.status != PropertyStatus::violated) continue;
      bad.insert(base_id(r.property_id));
      REQUIRE(r.witness_pattern);
      std::vector<int> w = r.witness;
      std::sort(w.begin(), w.end());
      std::vector<PatternName> only{*r.witness_pattern};
      auto e = classify_set(m.g, w, only);
      REQUIRE(e);
      CHECK(embedding_valid(m.g, *e));
      CHECK(brute::contains_induced(induced(m.g, std::span<const int>(w)).graph, pattern_graph(*r.witness_pattern)));
    }
    CHECK(bad == std::set<std::string>{m.property});
    covered.insert(m.property);
  }
  CHECK(covered.size() == 15);
}

TEST_CASE("co-banner gate: without ignore_conditions R14 and R15 are not applicable on their mutants") {
  for (const auto& m : load_mutants()) {
    if (!m.ignore) continue;
    for (const auto& r : check_properties(m.g, build_partition(m.g, m.cycle)))
      if (base_id(r.property_id) == m.property) CHECK(r.status == PropertyStatus::not_applicable);
  }
}

TEST_CASE("in-class graphs violate no property at any 4-cycle") {
  FuzzConfig cfg;
  cfg.sampler.n = 7;
  cfg.n_max = 11;
  cfg.sampler.seed = 77;
  cfg.probs = {{1, 3}, {1, 2}, {2, 3}};
  int cycles = 0;
  for (int i = 0; i < 120; ++i) {
    Graph g = sample_in_class(sample_config(cfg, i));
    for (const auto& emb : distinct_c4s(g)) {
      ++cycles;
      for (const auto& r : check_properties(g, build_partition(g, emb))) CHECK(r.status != PropertyStatus::violated);
    }
  }
  CHECK(cycles > 100);
}
