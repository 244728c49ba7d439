#include <doctest.h>
#include <omp.h>

#include "chibind/graph_io.hpp"
#include "chibind/harness.hpp"
#include "chibind/patterns.hpp"

using namespace chibind;

TEST_CASE("SplitMix64 reference outputs") {
  SplitMix64 r(0);
  CHECK(r.next() == 0xe220a8397b1dcdafULL);
  CHECK(r.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(r.next() == 0x06c45d188009454fULL);
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
}

TEST_CASE("rational parsing") {
  auto r = parse_rational("1/3");
  CHECK(r.num == 1);
  CHECK(r.den == 3);
  auto d = parse_rational("0.25");
  CHECK(d.num == 25);
  CHECK(d.den == 100);
  CHECK(parse_rational("1").num == 1);
  CHECK(parse_rational("0").num == 0);
  CHECK(to_string(parse_rational("2/5")) == "2/5");
  for (const char* bad : {"", "3/2", "1/0", "-1", "abc", "0.", "1/2/3", "2"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("sampler is deterministic for a fixed seed") {
  SamplerConfig cfg;
  cfg.n = 10;
  cfg.seed = 42;
  cfg.edge_prob = {1, 2};
  std::string a = encode_graph6(sample_in_class(cfg));
  std::string b = encode_graph6(sample_in_class(cfg));
  CHECK(a == b);
  Sampler s1(cfg), s2(cfg);
  for (int i = 0; i < 5; ++i) CHECK(s1.next() == s2.next());
  cfg.seed = 43;
  CHECK(encode_graph6(sample_in_class(cfg)) != a);
}

TEST_CASE("trivial sampler cases") {
  SamplerConfig cfg;
  cfg.n = 5;
  cfg.edge_prob = {0, 1};
  for (auto mode : {SampleMode::reject, SampleMode::repair}) {
    cfg.mode = mode;
    Graph g = sample_in_class(cfg);
    CHECK(g.order() == 5);
    CHECK(g.size() == 0);
  }
  // Four vertices are always accepted on the first draw.
  cfg.n = 4;
  cfg.mode = SampleMode::reject;
  cfg.edge_prob = {1, 2};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    cfg.seed = seed;
    Sampler s(cfg);
    s.next();
    CHECK(s.last_attempts() == 1);
  }
}

TEST_CASE("sampler limits") {
  SamplerConfig cfg;
  cfg.mode = SampleMode::reject;
  cfg.n = 15;
  CHECK_THROWS_AS(Sampler{cfg}, std::invalid_argument);
  cfg.mode = SampleMode::repair;
  cfg.n = 31;
  CHECK_THROWS_AS(Sampler{cfg}, std::invalid_argument);
  cfg.n = 10;
  cfg.edge_prob = {3, 2};
  CHECK_THROWS_AS(Sampler{cfg}, std::invalid_argument);
  cfg.edge_prob = {1, 2};
  cfg.mode = SampleMode::reject;
  cfg.n = 14;
  cfg.max_attempts = 3;
  CHECK_THROWS_AS(sample_in_class(cfg), SamplingError);
}

TEST_CASE("repair mode output is always in the class") {
  SamplerConfig cfg;
  cfg.mode = SampleMode::repair;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    cfg.seed = seed;
    cfg.n = 6 + static_cast<int>(seed % 6);
    cfg.edge_prob = {1 + seed % 3, 4};
    Graph g = sample_in_class(cfg);
    CHECK(g.order() == cfg.n);
    CHECK(in_class(g));
  }
  // Sparse draws reach the top of the repair range.
  cfg.n = 30;
  cfg.edge_prob = {1, 10};
  cfg.seed = 1;
  CHECK(in_class(sample_in_class(cfg)));
}

TEST_CASE("per-sample configs depend only on the index") {
  FuzzConfig cfg;
  cfg.sampler.n = 8;
  cfg.n_max = 12;
  cfg.probs = {{1, 4}, {3, 4}};
  for (int i = 0; i < 50; ++i) {
    auto a = sample_config(cfg, i), b = sample_config(cfg, i);
    CHECK(a.seed == b.seed);
    CHECK(a.n == b.n);
    CHECK(a.n >= 8);
    CHECK(a.n <= 12);
    CHECK((a.edge_prob.num == 1 || a.edge_prob.num == 3));
  }
}

TEST_CASE("fuzz campaign") {
  FuzzConfig cfg;
  cfg.sampler.n = 7;
  cfg.n_max = 11;
  cfg.sampler.seed = 3;
  cfg.probs = {{1, 4}, {1, 2}, {3, 4}};
  CHECK_THROWS_AS(fuzz_bound(cfg, 0), std::invalid_argument);
  auto r = fuzz_bound(cfg, 60);
  CHECK(r.samples == 60);
  CHECK(r.passed());
  CHECK(r.omega2_samples > 0);
  CHECK(r.c4_samples > 0);
  CHECK(r.fallback_rate >= 0.0);
  CHECK(r.render().rfind("samples=60 violations=0", 0) == 0);
  for (int i = 0; i < 60; ++i) CHECK(r.outcomes[i].sample == i);
}

TEST_CASE("parallel campaign matches the serial reference") {
  FuzzConfig cfg;
  cfg.sampler.n = 8;
  cfg.n_max = 12;
  cfg.sampler.seed = 17;
  cfg.probs = {{1, 3}, {1, 2}, {2, 3}};
  omp_set_num_threads(4);  // more threads than cores still exercises the interleaving
  auto a = fuzz_bound(cfg, 80), b = fuzz_bound_parallel(cfg, 80);
  CHECK(a.render() == b.render());
  REQUIRE(a.outcomes.size() == b.outcomes.size());
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    CHECK(a.outcomes[i].n == b.outcomes[i].n);
    CHECK(a.outcomes[i].omega == b.outcomes[i].omega);
    CHECK(a.outcomes[i].chi == b.outcomes[i].chi);
    CHECK(a.outcomes[i].colors_used == b.outcomes[i].colors_used);
  }
}
