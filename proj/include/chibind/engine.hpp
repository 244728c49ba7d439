#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "chibind/c4_partition.hpp"
#include "chibind/graph.hpp"
#include "chibind/oracles.hpp"
#include "chibind/patterns.hpp"

namespace chibind {

// g(1)=1, g(2)=4, g(w)=max(w+3, floor(3w/2)-1). Throws std::domain_error for w<1.
int bound(int omega);

struct Universal {
  int v;
};
// Nonadjacent, N(dominated) subset of N(dominator).
struct Comparable {
  int dominated;
  int dominator;
};
// deg(v) <= omega + 2.
struct NiceVertex {
  int v;
};
// Pairwise disjoint stable sets whose removal drops omega by at least 2.
struct NicePartition {
  std::array<VertexSet, 3> sets;
  std::string recipe;
};
// Proper coloring with at most omega + 3 colors.
struct DirectColoring {
  std::vector<int> coloring;
  std::string recipe;
};

using GoodCertificate = std::variant<Universal, Comparable, NiceVertex, NicePartition, DirectColoring>;

std::string_view kind_name(const GoodCertificate& c);
std::string summarize(const GoodCertificate& c);
// omega < 0 means "compute it".
bool validate_certificate(const Graph& g, const GoodCertificate& c, int omega = -1);

class NotInClassError : public std::runtime_error {
 public:
  explicit NotInClassError(PatternEmbedding w);
  const PatternEmbedding& witness() const { return witness_; }

 private:
  PatternEmbedding witness_;
};

// A step the theory says cannot fail did fail: out-of-class input or a bug.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, std::vector<int> witness = {},
                    std::optional<PatternName> pattern = std::nullopt)
      : std::invalid_argument(what), witness_(std::move(witness)), pattern_(pattern) {}
  const std::vector<int>& witness() const { return witness_; }
  const std::optional<PatternName>& pattern() const { return pattern_; }

 private:
  std::vector<int> witness_;
  std::optional<PatternName> pattern_;
};

struct DerivationStep {
  std::string kind;
  std::string payload;
  int order = 0;  // vertex count of the graph the step applied to
};

struct ColoringDerivation {
  std::vector<int> coloring;
  std::vector<DerivationStep> steps;
  int colors_used = 0;
  int exact_fallbacks = 0;

  std::string render_trace() const;
};

struct EngineOptions {
  SolverLimits limits = default_limits();
  bool check_class = true;
  // Recursions tried per level through a nice partition whose a-priori
  // bound does not close (omega 5..9).
  int unsafe_partition_attempts = 1;
};

std::optional<GoodCertificate> find_certificate(const Graph& g);

ColoringDerivation color(const Graph& g, const EngineOptions& opt = {});

std::optional<ColoringDerivation> color_via_complement(const Graph& g);

ColoringDerivation color_k23_case(const Graph& g, const PatternEmbedding& k23);

std::optional<GoodCertificate> color_c4_case(const Graph& g, const C4Partition& part);

std::vector<int> color_complete_multipartite(const Graph& g);

std::vector<int> color_cobipartite(const Graph& g);

}  // namespace chibind
