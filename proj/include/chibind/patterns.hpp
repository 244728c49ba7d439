#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chibind/graph.hpp"

namespace chibind {

enum class PatternName {
  P2_P3,
  CO_P2_P3,
  C4,
  K23,
  K2_K3,
  BANNER,
  CO_BANNER,
  H1,
  CO_H1,
  H2,
  CO_H2,
  H3,
  CO_H3,
  P6,
  K2_K1,
};

inline constexpr std::array<PatternName, 15> kAllPatterns = {
    PatternName::P2_P3,  PatternName::CO_P2_P3,  PatternName::C4,    PatternName::K23,
    PatternName::K2_K3,  PatternName::BANNER,    PatternName::CO_BANNER, PatternName::H1,
    PatternName::CO_H1,  PatternName::H2,        PatternName::CO_H2, PatternName::H3,
    PatternName::CO_H3,  PatternName::P6,        PatternName::K2_K1,
};

std::string_view to_string(PatternName p);
std::optional<PatternName> pattern_from_string(std::string_view s);

// Canonical labelled graph. Numbering: cycle vertices first (in cycle
// order), attached vertices last. CO_x has x's labels with complemented
// adjacency.
const Graph& pattern_graph(PatternName p);

struct PatternEmbedding {
  PatternName pattern;
  std::vector<int> map;  // map[i] = host image of pattern vertex i
  bool operator==(const PatternEmbedding&) const = default;
};

// Lexicographically first embedding (by map sequence), if any.
std::optional<PatternEmbedding> find_induced(const Graph& g, PatternName p);
// Restricts the image to `within`.
std::optional<PatternEmbedding> find_induced(const Graph& g, PatternName p, const VertexSet& within);
// Every embedding, in lexicographic order.
std::vector<PatternEmbedding> all_induced(const Graph& g, PatternName p);

bool embedding_valid(const Graph& g, const PatternEmbedding& e);

struct FreenessResult {
  bool free = true;
  std::optional<PatternEmbedding> witness;
  explicit operator bool() const { return free; }
};

// Patterns are tried in the given order; the witness is for the first hit.
FreenessResult is_free(const Graph& g, std::span<const PatternName> ps);
FreenessResult is_free(const Graph& g, std::initializer_list<PatternName> ps);
FreenessResult in_class(const Graph& g);

// Pattern induced by exactly this vertex set among `candidates`, if any.
// The embedding maps the pattern onto the set.
std::optional<PatternEmbedding> classify_set(const Graph& g, std::span<const int> verts,
                                             std::span<const PatternName> candidates);

}  // namespace chibind
