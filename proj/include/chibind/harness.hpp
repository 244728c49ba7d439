#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chibind/graph.hpp"
#include "chibind/oracles.hpp"
#include "chibind/rng.hpp"

namespace chibind {

struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

// "1/2", "0.25", "1" or "0". Throws std::invalid_argument on anything else
// or values outside [0,1].
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

enum class SampleMode { reject, repair };

struct SamplerConfig {
  int n = 10;
  Rational edge_prob{1, 2};
  std::uint64_t seed = 0;
  SampleMode mode = SampleMode::repair;
  int max_attempts = 10000;
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// G(n, p): edge uv (u<v, row-major) present iff next() % den < num.
Graph random_graph(int n, Rational p, SplitMix64& rng);

// Seeded stream of in-class graphs on exactly cfg.n vertices.
// reject: draw G(n,p) until one is in the class.
// repair: draw G(2n,p), delete vertices of forbidden embeddings (greedily,
// the one in most embeddings first) until clean, then trim at random down to n.
class Sampler {
 public:
  explicit Sampler(const SamplerConfig& cfg);
  Graph next();
  // Draws consumed by the last call to next().
  int last_attempts() const { return last_attempts_; }

 private:
  Graph attempt(int m);
  SamplerConfig cfg_;
  SplitMix64 rng_;
  int last_attempts_ = 0;
};

// The first graph of the stream for cfg.
Graph sample_in_class(const SamplerConfig& cfg);

struct Violation {
  int sample = 0;
  std::string graph6;
  std::string check;
  std::string witness;
};

struct SampleOutcome {
  int sample = 0;
  int n = 0;
  int omega = 0;
  int chi = 0;
  int colors_used = 0;
  bool has_c4 = false;
  bool exact_fallback = false;
  // For samples with an induced C4: certificate kind, or "ComplementCover".
  std::string certificate;
  std::vector<Violation> violations;
};

struct FuzzReport {
  int samples = 0;
  std::vector<Violation> violations;
  double fallback_rate = 0.0;
  int omega2_samples = 0;
  int c4_samples = 0;
  std::vector<SampleOutcome> outcomes;  // by sample index

  bool passed() const { return violations.empty(); }
  std::string render() const;
};

struct FuzzConfig {
  SamplerConfig sampler;
  // Sample i draws n uniformly from [sampler.n, n_max] (n_max < sampler.n means n_max = sampler.n).
  int n_max = 0;
  // Sample i draws its edge probability from this list (empty: sampler.edge_prob).
  std::vector<Rational> probs;
  SolverLimits limits = default_limits();
};

// Sampler config for sample i; depends only on (cfg, i).
SamplerConfig sample_config(const FuzzConfig& cfg, int i);

// Runs every check of the bound on one sample.
SampleOutcome run_sample(const FuzzConfig& cfg, int i);

// count >= 1, else std::invalid_argument.
FuzzReport fuzz_bound(const FuzzConfig& cfg, int count);
// Same report, samples in parallel with OpenMP.
FuzzReport fuzz_bound_parallel(const FuzzConfig& cfg, int count);

}  // namespace chibind
