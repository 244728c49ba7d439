#include <algorithm>
#include <sstream>

#include "internal.hpp"

namespace chibind {

namespace {

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::string pattern_text(const PatternEmbedding& w) {
  std::string s = std::string(to_string(w.pattern)) + " at ";
  for (std::size_t i = 0; i < w.map.size(); ++i) s += (i ? "," : "") + std::to_string(w.map[i]);
  return s;
}

}  // namespace

int bound(int omega) {
  if (omega < 1) throw std::domain_error("bound needs omega >= 1");
  if (omega == 1) return 1;
  if (omega == 2) return 4;
  return std::max(omega + 3, (3 * omega) / 2 - 1);
}

std::string_view kind_name(const GoodCertificate& c) {
  static constexpr std::string_view names[] = {"Universal", "Comparable", "NiceVertex", "NicePartition",
                                               "DirectColoring"};
  return names[c.index()];
}

std::string summarize(const GoodCertificate& c) {
  std::ostringstream os;
  if (auto* u = std::get_if<Universal>(&c)) os << "u=" << u->v;
  if (auto* p = std::get_if<Comparable>(&c)) os << "u=" << p->dominated << " under v=" << p->dominator;
  if (auto* n = std::get_if<NiceVertex>(&c)) os << "u=" << n->v;
  if (auto* np = std::get_if<NicePartition>(&c))
    os << "S1=" << set_text(np->sets[0]) << " S2=" << set_text(np->sets[1]) << " S3=" << set_text(np->sets[2])
       << " via " << np->recipe;
  if (auto* d = std::get_if<DirectColoring>(&c)) os << count_colors(d->coloring) << " colors via " << d->recipe;
  return os.str();
}

bool validate_certificate(const Graph& g, const GoodCertificate& c, int omega) {
  const int n = g.order();
  auto in_range = [&](int v) { return v >= 0 && v < n; };
  if (auto* u = std::get_if<Universal>(&c)) return in_range(u->v) && g.degree(u->v) == n - 1;
  if (auto* p = std::get_if<Comparable>(&c)) {
    if (!in_range(p->dominated) || !in_range(p->dominator) || p->dominated == p->dominator) return false;
    if (g.adjacent(p->dominated, p->dominator)) return false;
    return g.neighbors(p->dominated).subset_of(g.neighbors(p->dominator));
  }
  if (omega < 0) omega = clique_number(g);
  if (auto* nv = std::get_if<NiceVertex>(&c)) return in_range(nv->v) && g.degree(nv->v) <= omega + 2;
  if (auto* np = std::get_if<NicePartition>(&c)) {
    VertexSet all(n);
    int total = 0;
    for (const auto& s : np->sets) {
      if (s.capacity() != n || !is_stable(g, s)) return false;
      total += s.size();
      all |= s;
    }
    if (all.size() != total) return false;
    return clique_number(g, g.vertices() - all) <= omega - 2;
  }
  const auto& d = std::get<DirectColoring>(c);
  return is_proper_coloring(g, d.coloring) && count_colors(d.coloring) <= omega + 3;
}

NotInClassError::NotInClassError(PatternEmbedding w)
    : std::runtime_error("graph is not in the class: contains " + pattern_text(w)), witness_(std::move(w)) {}

std::string ColoringDerivation::render_trace() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < steps.size(); ++k)
    os << "step " << k + 1 << ": " << steps[k].kind << ' ' << steps[k].payload << " on n=" << steps[k].order << '\n';
  return os.str();
}

namespace detail {

std::optional<Edge> inner_edge(const Graph& g, const VertexSet& s) {
  for (int v = s.first(); v != -1; v = s.next(v)) {
    int u = (g.neighbors(v) & s).next(v);
    if (u != -1) return Edge{v, u};
  }
  return std::nullopt;
}

ColoringBuilder::ColoringBuilder(const Graph& g) : g_(g), color_(g.order(), -1) {}

void ColoringBuilder::add_class(const VertexSet& s, const std::string& name) {
  if (s.empty()) return;
  if (auto e = inner_edge(g_, s))
    throw InvariantFailure(name + " is not stable: " + std::to_string(e->first) + "-" + std::to_string(e->second));
  s.for_each([&](int v) {
    if (color_[v] != -1) throw InvariantFailure(name + " reuses vertex " + std::to_string(v));
    color_[v] = next_;
  });
  ++next_;
}

void ColoringBuilder::add_coloring(const VertexSet& s, const std::vector<int>& sub, const std::string& name) {
  auto m = s.members();
  if (sub.size() != m.size()) throw InvariantFailure(name + ": coloring size mismatch");
  int used = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (color_[m[i]] != -1) throw InvariantFailure(name + " reuses vertex " + std::to_string(m[i]));
    color_[m[i]] = next_ + sub[i];
    used = std::max(used, sub[i] + 1);
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (sub[i] == sub[j] && g_.adjacent(m[i], m[j]))
        throw InvariantFailure(name + " is not proper: " + std::to_string(m[i]) + "-" + std::to_string(m[j]));
  next_ += used;
}

void ColoringBuilder::add_singletons(const VertexSet& s) {
  s.for_each([&](int v) { add_class(VertexSet(g_.order(), {v}), "singleton"); });
}

std::vector<int> ColoringBuilder::finish() const {
  for (int v = 0; v < g_.order(); ++v)
    if (color_[v] == -1) throw InvariantFailure("vertex " + std::to_string(v) + " left uncolored");
  // compact the palette
  std::vector<int> remap(next_, -1);
  std::vector<int> out(color_.size());
  int k = 0;
  for (std::size_t v = 0; v < color_.size(); ++v) {
    if (remap[color_[v]] == -1) remap[color_[v]] = k++;
    out[v] = remap[color_[v]];
  }
  return out;
}

CliqueHitting::CliqueHitting(const Graph& g, int omega) {
  if (omega < 2) return;
  cliques_ = maximal_cliques(g, omega - 1);
  for (const auto& k : cliques_) need_.push_back(k.size() - omega + 2);
}

bool CliqueHitting::drops(const VertexSet& removed) const {
  for (std::size_t i = 0; i < cliques_.size(); ++i)
    if (cliques_[i].intersection_size(removed) < need_[i]) return false;
  return true;
}

bool is_nice_partition(const Graph& g, const std::array<VertexSet, 3>& s, const CliqueHitting& hit) {
  VertexSet all(g.order());
  int total = 0;
  for (const auto& x : s) {
    if (!is_stable(g, x)) return false;
    total += x.size();
    all |= x;
  }
  return all.size() == total && hit.drops(all);
}

std::vector<std::array<int, 4>> dihedral(const std::array<int, 4>& c) {
  std::vector<std::array<int, 4>> out;
  for (int flip = 0; flip < 2; ++flip)
    for (int r = 0; r < 4; ++r) {
      std::array<int, 4> d;
      for (int i = 0; i < 4; ++i) d[i] = flip ? c[((r - i) % 4 + 4) % 4] : c[(r + i) % 4];
      out.push_back(d);
    }
  return out;
}

void closed_form_partitions(const Graph& g, const CliqueHitting& hit, const std::function<bool(NicePartition)>& f) {
  const int n = g.order();
  const bool c4_case = is_free(g, {PatternName::K23, PatternName::BANNER}).free;
  for (const auto& emb : distinct_c4s(g)) {
    C4Partition p;
    try {
      p = build_partition(g, emb);
    } catch (const ThreeNeighborError&) {
      continue;
    }
    auto c = p.c;
    for (int i = 0; i < 4; ++i) {
      NicePartition split{{VertexSet(n, {c[i], c[(i + 2) % 4]}), VertexSet(n, {c[(i + 1) % 4]}),
                           p.t | VertexSet(n, {c[(i + 3) % 4]})},
                          "cycle split"};
      if (is_nice_partition(g, split.sets, hit) && f(std::move(split))) return;
    }
    for (int i = 0; i < 2; ++i) {
      NicePartition pair{{p.b[i] | VertexSet(n, {c[i + 2]}), p.b[i + 2] | VertexSet(n, {c[i]}),
                          p.t | VertexSet(n, {c[i + 1], c[(i + 3) % 4]})},
                         "opposite B blocks"};
      if (is_nice_partition(g, pair.sets, hit) && f(std::move(pair))) return;
    }
    if (!c4_case || !p.a_all().empty() || !p.x_all().empty()) continue;
    for (const auto& cyc : dihedral(p.c)) {
      bool stop = false;
      c4_recipes(g, build_partition(g, cyc), [&](GoodCertificate cert) {
        auto* np = std::get_if<NicePartition>(&cert);
        if (!np || !is_nice_partition(g, np->sets, hit)) return false;
        stop = f(std::move(*np));
        return stop;
      });
      if (stop) return;
    }
  }
}

std::optional<NicePartition> greedy_nice_partition(const Graph& g, int omega, const CliqueHitting& hit) {
  const int n = g.order();
  const auto& cl = hit.cliques();
  // membership lists
  std::vector<std::vector<int>> in(n);
  for (std::size_t k = 0; k < cl.size(); ++k) cl[k].for_each([&](int v) { in[v].push_back(static_cast<int>(k)); });

  for (int start = 0; start < n; ++start) {
    std::vector<int> need(cl.size());
    for (std::size_t k = 0; k < cl.size(); ++k) need[k] = hit.need(k);
    VertexSet used(n);
    std::array<VertexSet, 3> sets{VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int s = 0; s < 3; ++s) {
      VertexSet& cur = sets[s];
      VertexSet avail = g.vertices() - used;
      auto take = [&](int v) {
        cur.insert(v);
        used.insert(v);
        avail.erase(v);
        avail -= g.neighbors(v);
        for (int k : in[v]) --need[k];
      };
      if (s == 0) take(start);
      while (true) {
        int best = -1, best_score = 0;
        avail.for_each([&](int v) {
          int score = 0;
          for (int k : in[v])
            if (need[k] > 0 && !cl[k].intersects(cur)) ++score;
          if (score > best_score) {
            best_score = score;
            best = v;
          }
        });
        if (best == -1) break;
        take(best);
      }
      // extend to a maximal stable set
      for (int v = avail.first(); v != -1; v = avail.next(v)) take(v);
    }
    if (std::all_of(need.begin(), need.end(), [](int x) { return x <= 0; })) {
      VertexSet all = sets[0] | sets[1] | sets[2];
      if (clique_number(g, g.vertices() - all) <= omega - 2)
        return NicePartition{sets, "greedy stable sets"};
    }
  }
  return std::nullopt;
}

}  // namespace detail

std::optional<GoodCertificate> find_certificate(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return Universal{v};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      if (g.neighbors(u).subset_of(g.neighbors(v))) return Comparable{u, v};
      if (g.neighbors(v).subset_of(g.neighbors(u))) return Comparable{v, u};
    }
  const int omega = clique_number(g);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) <= omega + 2) return NiceVertex{v};

  detail::CliqueHitting hit(g, omega);
  std::optional<GoodCertificate> found;
  detail::closed_form_partitions(g, hit, [&](NicePartition np) {
    found = std::move(np);
    return true;
  });
  if (found) return found;
  if (auto np = detail::greedy_nice_partition(g, omega, hit)) return *np;

  if (auto k23 = find_induced(g, PatternName::K23)) {
    try {
      auto d = color_k23_case(g, *k23);
      return DirectColoring{d.coloring, d.steps.empty() ? "k23" : d.steps.back().payload};
    } catch (const InvariantFailure&) {
    }
  } else if (is_free(g, {PatternName::BANNER}).free) {
    for (const auto& emb : distinct_c4s(g)) {
      try {
        if (auto c = color_c4_case(g, build_partition(g, emb))) return c;
      } catch (const std::exception&) {
      }
    }
  }
  return std::nullopt;
}

}  // namespace chibind
