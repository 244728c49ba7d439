#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

#include "chibind/harness.hpp"
#include "chibind/patterns.hpp"

namespace chibind {

namespace {

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

// Induced P2+P3 has 3 edges and degrees {2,1,1,1,1}; its complement 7 edges and {2,3,3,3,3}.
bool forbidden5(const Graph& g, const int* v) {
  int d[5] = {0, 0, 0, 0, 0}, m = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (g.adjacent(v[i], v[j])) ++d[i], ++d[j], ++m;
  if (m != 3 && m != 7) return false;
  const int rest = m == 3 ? 1 : 3;
  int hubs = 0, rests = 0;
  for (int x : d) hubs += x == 2, rests += x == rest;
  return hubs == 1 && rests == 4;
}

// Greedy hitting set of the forbidden 5-sets: repeatedly delete the vertex
// lying in the most of them (lowest index on ties).
Graph repair(const Graph& g) {
  const int n = g.order();
  std::vector<std::array<int, 5>> sets;
  std::vector<std::vector<int>> through(n);
  std::vector<int> count(n, 0);
  int v[5];
  for (v[0] = 0; v[0] < n; ++v[0])
    for (v[1] = v[0] + 1; v[1] < n; ++v[1])
      for (v[2] = v[1] + 1; v[2] < n; ++v[2])
        for (v[3] = v[2] + 1; v[3] < n; ++v[3])
          for (v[4] = v[3] + 1; v[4] < n; ++v[4])
            if (forbidden5(g, v)) {
              for (int x : v) {
                through[x].push_back(static_cast<int>(sets.size()));
                ++count[x];
              }
              sets.push_back({v[0], v[1], v[2], v[3], v[4]});
            }
  std::vector<char> dead(sets.size(), 0);
  VertexSet removed(n);
  while (true) {
    int best = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    if (n == 0 || count[best] == 0) break;
    removed.insert(best);
    for (int s : through[best]) {
      if (dead[s]) continue;
      dead[s] = 1;
      for (int x : sets[s]) --count[x];
    }
  }
  return remove_vertices(g, removed).graph;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  Rational r;
  auto bad = [&] { return std::invalid_argument("not a probability in [0,1]: '" + s + "'"); };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    if (!parse_u64(std::string_view(s).substr(0, slash), r.num) ||
        !parse_u64(std::string_view(s).substr(slash + 1), r.den))
      throw bad();
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string_view whole = std::string_view(s).substr(0, dot), frac = std::string_view(s).substr(dot + 1);
    std::uint64_t w = 0, f = 0;
    if ((!whole.empty() && !parse_u64(whole, w)) || frac.empty() || frac.size() > 9 || !parse_u64(frac, f)) throw bad();
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    r.num = w * r.den + f;
  } else {
    if (!parse_u64(s, r.num)) throw bad();
    r.den = 1;
  }
  if (r.den == 0 || r.num > r.den) throw bad();
  return r;
}

std::string to_string(const Rational& r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

Graph random_graph(int n, Rational p, SplitMix64& rng) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(p.den) < p.num) b.add_edge(u, v);
  return b.build();
}

Sampler::Sampler(const SamplerConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
  if (cfg.n < 0) throw std::invalid_argument("sampler needs n >= 0");
  if (cfg.edge_prob.den == 0 || cfg.edge_prob.num > cfg.edge_prob.den)
    throw std::invalid_argument("edge probability outside [0,1]");
  if (cfg.mode == SampleMode::reject && cfg.n > 14) throw std::invalid_argument("reject mode supports n <= 14");
  if (cfg.mode == SampleMode::repair && cfg.n > 30) throw std::invalid_argument("repair mode supports n <= 30");
  if (cfg.max_attempts < 1) throw std::invalid_argument("max_attempts must be positive");
}

Graph Sampler::attempt(int m) {
  Graph g = random_graph(m, cfg_.edge_prob, rng_);
  if (cfg_.mode == SampleMode::reject) return g;
  g = repair(g);
  while (g.order() > cfg_.n) {
    int v = static_cast<int>(rng_.below(g.order()));
    g = remove_vertices(g, VertexSet(g.order(), {v})).graph;
  }
  return g;
}

Graph Sampler::next() {
  for (int a = 0; a < cfg_.max_attempts; ++a) {
    Graph g = attempt(cfg_.mode == SampleMode::reject ? cfg_.n : 2 * cfg_.n);
    if (g.order() == cfg_.n && in_class(g).free) {
      last_attempts_ = a + 1;
      return g;
    }
  }
  last_attempts_ = cfg_.max_attempts;
  throw SamplingError("no in-class graph on " + std::to_string(cfg_.n) + " vertices after " +
                      std::to_string(cfg_.max_attempts) + " attempts");
}

Graph sample_in_class(const SamplerConfig& cfg) { return Sampler(cfg).next(); }

}  // namespace chibind
