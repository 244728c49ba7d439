#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chibind/graph.hpp"

namespace chibind {

// Complement of the intersection graph of the 27 lines on a cubic surface.
// Vertices: a1..a6 (0..5), b1..b6 (6..11), c_ij for i<j in lex order (12..26).
Graph schlafli();
Graph schlafli_complement();
// The subgraph of schlafli() induced by the neighborhood of vertex 0.
Graph clebsch_complement();
Graph clebsch_complement_minus(int v);
// Cliques Q1={a_i}, Q2={b_i}, S={s_i} (labels 0..k-1, k..2k-1, 2k..3k-1),
// a_i~b_i, s_i complete to (Q1 u Q2) minus {a_i, b_i}. Throws std::domain_error for k<2.
Graph g_k(int k);
// base joined with a clique on t new vertices (labelled after base).
Graph join_kt(const Graph& base, int t);
// Mycielskian of C5.
Graph grotzsch();

// Names: schlafli, schlafli-complement, clebsch-complement, clebsch-complement-minus-<v>,
// g<k>, grotzsch, and any of these followed by "+k<t>" for a join with K_t.
std::optional<Graph> named_graph(const std::string& name);

struct TightnessRow {
  int k = 0;
  std::string witness;
  int n = 0;
  int omega = 0;
  int chi = 0;
  int bound = 0;
  std::string method;  // "matching" (alpha <= 2) or "exact"
  bool ok = false;
};

struct TightnessReport {
  std::vector<TightnessRow> rows;
  bool passed() const;
  std::string render() const;
};

// Witness for clique number k: k=3,4 Q'+K_{k-3}; 5..7 H+K_{k-5}; 8,9 Q+K_{k-6};
// k>=10 G_{k-1}. Throws std::domain_error unless 3 <= k.
std::string tightness_witness_name(int k);
Graph tightness_witness(int k);
TightnessRow tightness_row(int k);

// Rows 3..k_max. Throws std::domain_error unless 3 <= k_max <= 15.
TightnessReport tightness_report(int k_max);
// Same rows, computed concurrently with OpenMP.
TightnessReport tightness_report_parallel(int k_max);

}  // namespace chibind
