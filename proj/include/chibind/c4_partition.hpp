#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chibind/graph.hpp"
#include "chibind/patterns.hpp"

namespace chibind {

// Blocks of V(G) relative to an induced 4-cycle c[0]-c[1]-c[2]-c[3]-c[0],
// by neighbourhood trace on the cycle (indices mod 4):
//   a[i]: {c[i]}      b[i]: {c[i], c[i+1]}      x[j]: {c[j], c[j+2]}
//   d: all of C        t: none of C
struct C4Partition {
  std::array<int, 4> c{};
  std::array<VertexSet, 4> a;
  std::array<VertexSet, 4> b;
  std::array<VertexSet, 2> x;
  VertexSet d;
  VertexSet t;

  int host_order() const { return d.capacity(); }
  VertexSet cycle() const;
  VertexSet a_all() const;
  VertexSet b_all() const;
  VertexSet x_all() const;
};

class ThreeNeighborError : public std::runtime_error {
 public:
  ThreeNeighborError(int vertex, std::optional<PatternEmbedding> witness);
  int vertex() const { return vertex_; }
  const std::optional<PatternEmbedding>& witness() const { return witness_; }

 private:
  int vertex_;
  std::optional<PatternEmbedding> witness_;
};

// Throws std::invalid_argument if the cycle is not an induced C4 of g, and
// ThreeNeighborError if a vertex sees exactly three cycle vertices.
C4Partition build_partition(const Graph& g, const PatternEmbedding& c4);
C4Partition build_partition(const Graph& g, std::array<int, 4> cycle);

// One embedding per induced 4-cycle (the lexicographically first labelling).
std::vector<PatternEmbedding> distinct_c4s(const Graph& g);

enum class PropertyStatus { holds, violated, not_applicable };

std::string_view to_string(PropertyStatus s);

struct PropertyReport {
  std::string property_id;  // R1..R15, R9a/b/c, R12a/b
  int index = -1;           // cycle index i or j (0-based), -1 if none
  int index2 = -1;          // second index (R10's j)
  PropertyStatus status = PropertyStatus::holds;
  std::vector<int> witness;  // host vertices
  std::optional<PatternName> witness_pattern;

  std::string label() const;
};

struct CheckOptions {
  // Evaluate conditional properties even when their freeness hypothesis
  // fails. The hypothesis pattern then counts as a valid witness.
  bool ignore_conditions = false;
};

std::vector<PropertyReport> check_properties(const Graph& g, const C4Partition& p,
                                             CheckOptions opt = {});

// "R9a[j=0]: holds" / "R1[i=0]: violated witness=0,1,5,6,7 (P2_P3)"
std::string render_report(const PropertyReport& r);

}  // namespace chibind
