#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chibind/graph.hpp"

namespace chibind {

// Raised when an exact search runs out of budget. Never paired with a guess.
class InexactError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Deadline {
 public:
  static Deadline never() { return Deadline(); }
  static Deadline after(std::chrono::milliseconds ms) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() + ms;
    return d;
  }
  bool expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

struct SolverLimits {
  int desk_limit = 40;  // larger inputs run, with a warning on stderr
  std::chrono::milliseconds timeout{120000};
};

// Reads CHI_BIND_TIMEOUT_MS when set.
SolverLimits default_limits();

// Maximum clique; among maximum cliques, the lexicographically smallest
// ascending vertex sequence.
VertexSet max_clique(const Graph& g);
int clique_number(const Graph& g);
// Maximum clique inside the subgraph induced by `within`.
int clique_number(const Graph& g, const VertexSet& within);
VertexSet max_stable_set(const Graph& g);
int stability_number(const Graph& g);

struct ChromaticResult {
  int chi = 0;
  std::vector<int> coloring;
};

// Exact. Throws InexactError on timeout.
ChromaticResult chromatic_number(const Graph& g, const SolverLimits& limits = default_limits());
// theta(g) = chi(complement g); cover[v] is the clique index of v.
ChromaticResult clique_cover(const Graph& g, const SolverLimits& limits = default_limits());

// Edmonds blossom algorithm; edges returned as (u,v), u<v, sorted.
std::vector<Edge> max_matching(const Graph& g);

// chi via n - nu(complement). Throws std::domain_error when alpha(g) >= 3.
int chi_alpha2(const Graph& g);
// Optimal coloring for alpha <= 2: matched complement pairs share a color.
std::vector<int> coloring_alpha2(const Graph& g);

struct ExactStats {
  int omega = 0;
  int alpha = 0;
  int chi = 0;
  int theta = 0;
};

ExactStats exact_stats(const Graph& g, const SolverLimits& limits = default_limits());

// All maximal cliques of size >= min_size (Bron-Kerbosch with pivoting).
std::vector<VertexSet> maximal_cliques(const Graph& g, int min_size);

}  // namespace chibind
