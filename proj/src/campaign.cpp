#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chibind/engine.hpp"
#include "chibind/graph_io.hpp"
#include "chibind/harness.hpp"
#include "chibind/patterns.hpp"

namespace chibind {

SamplerConfig sample_config(const FuzzConfig& cfg, int i) {
  SplitMix64 pick(derive_seed(cfg.sampler.seed, static_cast<std::uint64_t>(i)));
  SamplerConfig s = cfg.sampler;
  const int hi = std::max(cfg.n_max, cfg.sampler.n);
  s.n = cfg.sampler.n + static_cast<int>(pick.below(hi - cfg.sampler.n + 1));
  if (!cfg.probs.empty()) s.edge_prob = cfg.probs[pick.below(cfg.probs.size())];
  s.seed = pick.next();
  return s;
}

SampleOutcome run_sample(const FuzzConfig& cfg, int i) {
  SampleOutcome out;
  out.sample = i;
  auto fail = [&](std::string g6, std::string check, std::string witness) {
    out.violations.push_back({i, std::move(g6), std::move(check), std::move(witness)});
  };

  Graph g;
  try {
    g = sample_in_class(sample_config(cfg, i));
  } catch (const SamplingError& e) {
    fail("", "sampling", e.what());
    return out;
  }
  const std::string g6 = encode_graph6(g);
  out.n = g.order();
  if (auto w = in_class(g); !w.free) {
    fail(g6, "in-class", std::string(to_string(w.witness->pattern)));
    return out;
  }
  out.omega = g.order() ? clique_number(g) : 0;
  const int limit = out.omega ? bound(out.omega) : 0;

  try {
    EngineOptions opt;
    opt.limits = cfg.limits;
    auto d = color(g, opt);
    out.colors_used = d.colors_used;
    out.exact_fallback = d.exact_fallbacks > 0;
    if (!is_proper_coloring(g, d.coloring)) fail(g6, "engine-proper", "improper coloring");
    if (d.colors_used > limit)
      fail(g6, "engine-bound", "colors=" + std::to_string(d.colors_used) + " bound=" + std::to_string(limit));
  } catch (const std::exception& e) {
    fail(g6, "engine", e.what());
  }

  try {
    out.chi = chromatic_number(g, cfg.limits).chi;
    if (out.chi > limit)
      fail(g6, "exact-bound", "chi=" + std::to_string(out.chi) + " bound=" + std::to_string(limit));
    if (out.omega == 2 && out.chi > 4) fail(g6, "omega2", "chi=" + std::to_string(out.chi));
  } catch (const InexactError& e) {
    fail(g6, "exact-timeout", e.what());
  }

  out.has_c4 = find_induced(g, PatternName::C4).has_value();
  if (out.has_c4) {
    bool ok = false;
    try {
      auto c = find_certificate(g);
      ok = c && validate_certificate(g, *c, out.omega);
      if (ok) out.certificate = kind_name(*c);
      else if ((ok = color_via_complement(g).has_value())) out.certificate = "ComplementCover";
    } catch (const std::exception& e) {
      fail(g6, "certificate", e.what());
      ok = true;
    }
    if (!ok) fail(g6, "certificate", "no certificate");
  }
  return out;
}

namespace {

void check_count(int count) {
  if (count < 1) throw std::invalid_argument("fuzz campaign needs count >= 1");
}

FuzzReport assemble(std::vector<SampleOutcome> outcomes) {
  FuzzReport r;
  r.samples = static_cast<int>(outcomes.size());
  int fallbacks = 0;
  for (const auto& o : outcomes) {
    fallbacks += o.exact_fallback;
    r.omega2_samples += o.omega == 2;
    r.c4_samples += o.has_c4;
    r.violations.insert(r.violations.end(), o.violations.begin(), o.violations.end());
  }
  r.fallback_rate = r.samples ? static_cast<double>(fallbacks) / r.samples : 0.0;
  r.outcomes = std::move(outcomes);
  return r;
}

}  // namespace

FuzzReport fuzz_bound(const FuzzConfig& cfg, int count) {
  check_count(count);
  std::vector<SampleOutcome> outcomes;
  outcomes.reserve(count);
  for (int i = 0; i < count; ++i) outcomes.push_back(run_sample(cfg, i));
  return assemble(std::move(outcomes));
}

FuzzReport fuzz_bound_parallel(const FuzzConfig& cfg, int count) {
  check_count(count);
  std::vector<SampleOutcome> outcomes(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) outcomes[i] = run_sample(cfg, i);
  return assemble(std::move(outcomes));
}

std::string FuzzReport::render() const {
  std::ostringstream os;
  os << "samples=" << samples << " violations=" << violations.size() << " c4_samples=" << c4_samples
     << " omega2_samples=" << omega2_samples << " fallback_rate=" << fallback_rate << '\n';
  for (const auto& v : violations)
    os << "violation sample=" << v.sample << " check=" << v.check << " graph6=" << v.graph6 << " witness=" << v.witness
       << '\n';
  return os.str();
}

}  // namespace chibind
