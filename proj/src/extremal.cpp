#include "chibind/extremal.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "chibind/engine.hpp"
#include "chibind/oracles.hpp"

namespace chibind {

namespace {

// Lines a_i, b_i, c_ij; returns true when the two lines meet.
struct Line {
  char kind;  // 'a', 'b', 'c'
  int i, j;
};

std::vector<Line> lines() {
  std::vector<Line> out;
  for (int i = 0; i < 6; ++i) out.push_back({'a', i, -1});
  for (int i = 0; i < 6; ++i) out.push_back({'b', i, -1});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) out.push_back({'c', i, j});
  return out;
}

bool meet(const Line& x, const Line& y) {
  if (x.kind > y.kind) return meet(y, x);
  if (x.kind == 'a' && y.kind == 'a') return false;
  if (x.kind == 'b' && y.kind == 'b') return false;
  if (x.kind == 'a' && y.kind == 'b') return x.i != y.i;
  if (y.kind == 'c' && x.kind != 'c') return x.i == y.i || x.i == y.j;
  return x.i != y.i && x.i != y.j && x.j != y.i && x.j != y.j;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Graph schlafli() {
  auto ls = lines();
  GraphBuilder b(27);
  for (int u = 0; u < 27; ++u)
    for (int v = u + 1; v < 27; ++v)
      if (!meet(ls[u], ls[v])) b.add_edge(u, v);
  return b.build();
}

Graph schlafli_complement() { return complement(schlafli()); }

Graph clebsch_complement() {
  Graph q = schlafli();
  return induced(q, q.neighbors(0)).graph;
}

Graph clebsch_complement_minus(int v) {
  Graph h = clebsch_complement();
  if (v < 0 || v >= h.order()) throw std::domain_error("vertex out of range: " + std::to_string(v));
  return remove_vertices(h, VertexSet(h.order(), {v})).graph;
}

Graph g_k(int k) {
  if (k < 2) throw std::domain_error("g_k needs k >= 2, got " + std::to_string(k));
  GraphBuilder b(3 * k);
  for (int part = 0; part < 3; ++part)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) b.add_edge(part * k + i, part * k + j);
  for (int i = 0; i < k; ++i) {
    b.add_edge(i, k + i);
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      b.add_edge(2 * k + i, j);
      b.add_edge(2 * k + i, k + j);
    }
  }
  return b.build();
}

Graph join_kt(const Graph& base, int t) {
  if (t < 0) throw std::domain_error("join_kt needs t >= 0");
  if (t == 0) return base;
  return join(base, complete_graph(t));
}

Graph grotzsch() {
  GraphBuilder b(11);
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    b.add_edge(i, j);
    b.add_edge(5 + i, j);
    b.add_edge(5 + j, i);
    b.add_edge(10, 5 + i);
  }
  return b.build();
}

std::optional<Graph> named_graph(const std::string& name) {
  std::string base = name;
  int t = 0;
  if (auto plus = name.rfind("+k"); plus != std::string::npos) {
    if (!parse_int(std::string_view(name).substr(plus + 2), t) || t < 0) return std::nullopt;
    base = name.substr(0, plus);
  }
  std::optional<Graph> g;
  const std::string minus = "clebsch-complement-minus-";
  int v = 0;
  if (base == "schlafli") g = schlafli();
  else if (base == "schlafli-complement") g = schlafli_complement();
  else if (base == "clebsch-complement") g = clebsch_complement();
  else if (base == "grotzsch") g = grotzsch();
  else if (base.rfind(minus, 0) == 0 && parse_int(std::string_view(base).substr(minus.size()), v) && v >= 0 && v < 16)
    g = clebsch_complement_minus(v);
  else if (base.size() > 1 && base[0] == 'g' && parse_int(std::string_view(base).substr(1), v) && v >= 2)
    g = g_k(v);
  if (!g) return std::nullopt;
  return join_kt(*g, t);
}

std::string tightness_witness_name(int k) {
  if (k < 3) throw std::domain_error("tightness rows start at k=3");
  auto with = [](std::string b, int t) { return t == 0 ? b : b + "+k" + std::to_string(t); };
  if (k <= 4) return with("schlafli-complement", k - 3);
  if (k <= 7) return with("clebsch-complement", k - 5);
  if (k <= 9) return with("schlafli", k - 6);
  return "g" + std::to_string(k - 1);
}

Graph tightness_witness(int k) { return *named_graph(tightness_witness_name(k)); }

TightnessRow tightness_row(int k) {
  TightnessRow r;
  r.k = k;
  r.witness = tightness_witness_name(k);
  Graph g = tightness_witness(k);
  r.n = g.order();
  r.omega = clique_number(g);
  if (stability_number(g) <= 2) {
    r.chi = chi_alpha2(g);
    r.method = "matching";
  } else {
    r.chi = chromatic_number(g).chi;
    r.method = "exact";
  }
  r.bound = bound(k);
  r.ok = r.omega == k && r.chi == r.bound;
  return r;
}

static void check_kmax(int k_max) {
  if (k_max < 3 || k_max > 15) throw std::domain_error("tightness_report needs 3 <= k_max <= 15");
}

TightnessReport tightness_report(int k_max) {
  check_kmax(k_max);
  TightnessReport rep;
  for (int k = 3; k <= k_max; ++k) rep.rows.push_back(tightness_row(k));
  return rep;
}

TightnessReport tightness_report_parallel(int k_max) {
  check_kmax(k_max);
  TightnessReport rep;
  rep.rows.resize(k_max - 2);
  std::vector<std::string> errors(rep.rows.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 3; k <= k_max; ++k) {
    try {
      rep.rows[k - 3] = tightness_row(k);
    } catch (const std::exception& e) {
      errors[k - 3] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  return rep;
}

bool TightnessReport::passed() const {
  for (const auto& r : rows)
    if (!r.ok) return false;
  return !rows.empty();
}

std::string TightnessReport::render() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "k=" << r.k << " witness=" << r.witness << " n=" << r.n << " omega=" << r.omega << " chi=" << r.chi
       << " bound=" << r.bound << " via=" << r.method << ' ' << (r.ok ? "ok" : "FAIL") << '\n';
  }
  return os.str();
}

}  // namespace chibind
