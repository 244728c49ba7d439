#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chibind/engine.hpp"

namespace chibind::detail {

// First edge inside s, if any.
std::optional<Edge> inner_edge(const Graph& g, const VertexSet& s);

// Builds a coloring class by class; every class is checked for stability.
class ColoringBuilder {
 public:
  explicit ColoringBuilder(const Graph& g);
  // One color for the whole set (nothing if empty).
  void add_class(const VertexSet& s, const std::string& name);
  // Colors `s` with a coloring of g[s] (indexed in ascending order of s).
  void add_coloring(const VertexSet& s, const std::vector<int>& sub, const std::string& name);
  // Each vertex of s gets its own color.
  void add_singletons(const VertexSet& s);
  int colors() const { return next_; }
  std::vector<int> finish() const;

 private:
  const Graph& g_;
  std::vector<int> color_;
  int next_ = 0;
};

// Maximal cliques of size >= omega-1 and how often each must be hit for
// the clique number to drop by two.
class CliqueHitting {
 public:
  CliqueHitting(const Graph& g, int omega);
  bool drops(const VertexSet& removed) const;
  const std::vector<VertexSet>& cliques() const { return cliques_; }
  int need(std::size_t i) const { return need_[i]; }

 private:
  std::vector<VertexSet> cliques_;
  std::vector<int> need_;
};

bool is_nice_partition(const Graph& g, const std::array<VertexSet, 3>& s, const CliqueHitting& hit);

// Closed-form triples at every induced 4-cycle; f returns true to stop.
void closed_form_partitions(const Graph& g, const CliqueHitting& hit,
                            const std::function<bool(NicePartition)>& f);

std::optional<NicePartition> greedy_nice_partition(const Graph& g, int omega, const CliqueHitting& hit);

// The recipes of the C4 case for one labelling; results not yet validated.
void c4_recipes(const Graph& g, const C4Partition& part, const std::function<bool(GoodCertificate)>& f);

// The 8 relabellings of a cycle.
std::vector<std::array<int, 4>> dihedral(const std::array<int, 4>& c);

// Coloring of g[s] as complete multipartite, lifted to host indices.
std::vector<int> multipartite_on(const Graph& g, const VertexSet& s);

}  // namespace chibind::detail
