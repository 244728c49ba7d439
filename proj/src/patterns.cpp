#include "chibind/patterns.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace chibind {

namespace {

struct Entry {
  PatternName name;
  std::string_view text;
};

constexpr std::array<Entry, 15> kNames = {{
    {PatternName::P2_P3, "P2_P3"},   {PatternName::CO_P2_P3, "CO_P2_P3"},
    {PatternName::C4, "C4"},         {PatternName::K23, "K23"},
    {PatternName::K2_K3, "K2_K3"},   {PatternName::BANNER, "BANNER"},
    {PatternName::CO_BANNER, "CO_BANNER"}, {PatternName::H1, "H1"},
    {PatternName::CO_H1, "CO_H1"},   {PatternName::H2, "H2"},
    {PatternName::CO_H2, "CO_H2"},   {PatternName::H3, "H3"},
    {PatternName::CO_H3, "CO_H3"},   {PatternName::P6, "P6"},
    {PatternName::K2_K1, "K2_K1"},
}};

// The 4-cycle 0-1-2-3-0 plus extra vertices and edges.
Graph on_c4(int n, std::initializer_list<Edge> extra) {
  GraphBuilder b(n);
  for (int i = 0; i < 4; ++i) b.add_edge(i, (i + 1) % 4);
  for (auto [u, v] : extra) b.add_edge(u, v);
  return b.build();
}

Graph build(PatternName p) {
  switch (p) {
    case PatternName::P2_P3:
      return Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
    case PatternName::C4:
      return on_c4(4, {});
    case PatternName::K23:
      // parts {0,2} and {1,3,4}
      return on_c4(5, {{4, 0}, {4, 2}});
    case PatternName::K2_K3:
      return Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
    case PatternName::BANNER:
      return on_c4(5, {{4, 0}});
    case PatternName::H1:
      // triangle 4,5,6 hanging off three consecutive cycle vertices
      return on_c4(7, {{4, 0}, {5, 1}, {6, 2}, {4, 5}, {5, 6}, {4, 6}});
    case PatternName::H2:
      // 5-cycle with a pendant at 0
      return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}});
    case PatternName::H3:
      // 4 sees {0,1}, 5 sees {1,2}; 4 and 5 nonadjacent
      return on_c4(6, {{4, 0}, {4, 1}, {5, 1}, {5, 2}});
    case PatternName::P6:
      return path_graph(6);
    case PatternName::K2_K1:
      return Graph::from_edges(3, {{0, 1}});
    case PatternName::CO_P2_P3:
      return complement(build(PatternName::P2_P3));
    case PatternName::CO_BANNER:
      return complement(build(PatternName::BANNER));
    case PatternName::CO_H1:
      return complement(build(PatternName::H1));
    case PatternName::CO_H2:
      return complement(build(PatternName::H2));
    case PatternName::CO_H3:
      return complement(build(PatternName::H3));
  }
  throw std::logic_error("unknown pattern");
}

const std::map<PatternName, Graph>& catalog() {
  static const std::map<PatternName, Graph> c = [] {
    std::map<PatternName, Graph> m;
    for (auto p : kAllPatterns) m.emplace(p, build(p));
    return m;
  }();
  return c;
}

// Backtracking over injective maps, pattern vertices in order, host
// candidates ascending. Induced adjacency is enforced through bitset
// filtering, plus a degree/co-degree filter.
class Matcher {
 public:
  Matcher(const Graph& g, PatternName p, const VertexSet& within)
      : g_(g), name_(p), pat_(pattern_graph(p)), k_(pat_.order()), within_(within) {
    map_.resize(k_);
  }

  template <class F>
  void run(F&& on_match) {
    if (k_ > g_.order()) return;
    step(0, on_match);
  }

 private:
  template <class F>
  bool step(int i, F& on_match) {
    if (i == k_) return on_match(PatternEmbedding{name_, map_});
    VertexSet cand = within_;
    for (int j = 0; j < i; ++j) {
      cand.erase(map_[j]);
      if (pat_.adjacent(i, j))
        cand &= g_.neighbors(map_[j]);
      else
        cand -= g_.neighbors(map_[j]);
    }
    const int need_deg = pat_.degree(i);
    const int need_non = k_ - 1 - need_deg;
    const int n = g_.order();
    for (int h = cand.first(); h != -1; h = cand.next(h)) {
      if (g_.degree(h) < need_deg || n - 1 - g_.degree(h) < need_non) continue;
      map_[i] = h;
      if (step(i + 1, on_match)) return true;
    }
    return false;
  }

  const Graph& g_;
  PatternName name_;
  const Graph& pat_;
  int k_;
  VertexSet within_;
  std::vector<int> map_;
};

}  // namespace

std::string_view to_string(PatternName p) {
  for (const auto& e : kNames)
    if (e.name == p) return e.text;
  return "?";
}

std::optional<PatternName> pattern_from_string(std::string_view s) {
  for (const auto& e : kNames)
    if (e.text == s) return e.name;
  return std::nullopt;
}

const Graph& pattern_graph(PatternName p) { return catalog().at(p); }

std::optional<PatternEmbedding> find_induced(const Graph& g, PatternName p, const VertexSet& within) {
  std::optional<PatternEmbedding> out;
  Matcher(g, p, within).run([&](PatternEmbedding e) {
    out = std::move(e);
    return true;
  });
  return out;
}

std::optional<PatternEmbedding> find_induced(const Graph& g, PatternName p) {
  return find_induced(g, p, g.vertices());
}

std::vector<PatternEmbedding> all_induced(const Graph& g, PatternName p) {
  std::vector<PatternEmbedding> out;
  Matcher(g, p, g.vertices()).run([&](PatternEmbedding e) {
    out.push_back(std::move(e));
    return false;
  });
  return out;
}

bool embedding_valid(const Graph& g, const PatternEmbedding& e) {
  const Graph& pat = pattern_graph(e.pattern);
  if (static_cast<int>(e.map.size()) != pat.order()) return false;
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    if (e.map[i] < 0 || e.map[i] >= g.order()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (e.map[i] == e.map[j]) return false;
      if (g.adjacent(e.map[i], e.map[j]) != pat.adjacent(static_cast<int>(i), static_cast<int>(j)))
        return false;
    }
  }
  return true;
}

FreenessResult is_free(const Graph& g, std::span<const PatternName> ps) {
  for (auto p : ps)
    if (auto e = find_induced(g, p)) return {false, std::move(e)};
  return {};
}

FreenessResult is_free(const Graph& g, std::initializer_list<PatternName> ps) {
  return is_free(g, std::span<const PatternName>(ps.begin(), ps.size()));
}

FreenessResult in_class(const Graph& g) {
  return is_free(g, {PatternName::P2_P3, PatternName::CO_P2_P3});
}

std::optional<PatternEmbedding> classify_set(const Graph& g, std::span<const int> verts,
                                             std::span<const PatternName> candidates) {
  VertexSet within(g.order(), verts);
  if (within.size() != static_cast<int>(verts.size())) return std::nullopt;
  for (auto p : candidates) {
    if (pattern_graph(p).order() != within.size()) continue;
    if (auto e = find_induced(g, p, within)) return e;
  }
  return std::nullopt;
}

}  // namespace chibind
