#include <algorithm>
#include <queue>

#include "internal.hpp"

namespace chibind {

namespace {

std::string edge_text(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

// Components of the complement, as color classes.
std::vector<int> co_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  int k = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = k;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (u != v && comp[u] == -1 && !g.adjacent(u, v)) {
          comp[u] = k;
          stack.push_back(u);
        }
    }
    ++k;
  }
  return comp;
}

}  // namespace

std::vector<int> color_complete_multipartite(const Graph& g) {
  auto comp = co_components(g);
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (comp[u] != comp[v] || !g.adjacent(u, v)) continue;
      // Shortest non-edge path u..v; its first two steps give a K2+K1.
      std::vector<int> prev(n, -1);
      std::queue<int> q;
      q.push(u);
      prev[u] = u;
      while (!q.empty() && prev[v] == -1) {
        int x = q.front();
        q.pop();
        for (int y = 0; y < n; ++y)
          if (y != x && prev[y] == -1 && !g.adjacent(x, y)) {
            prev[y] = x;
            q.push(y);
          }
      }
      std::vector<int> path{v};
      while (path.back() != u) path.push_back(prev[path.back()]);
      int x0 = path[0], x1 = path[1], x2 = path[2];
      throw PreconditionError("not complete multipartite: K2+K1 at " + edge_text(x0, x2) + "," + std::to_string(x1),
                              {x0, x2, x1}, PatternName::K2_K1);
    }
  return comp;
}

std::vector<int> color_cobipartite(const Graph& g) {
  const int n = g.order();
  Graph h = complement(g);
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u = h.neighbors(v).first(); u != -1; u = h.neighbors(v).next(u)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          parent[u] = v;
          depth[u] = depth[v] + 1;
          q.push(u);
        } else if (side[u] == side[v]) {
          // odd cycle through the BFS tree
          std::vector<int> left, right;
          int a = v, b = u;
          while (depth[a] > depth[b]) left.push_back(a), a = parent[a];
          while (depth[b] > depth[a]) right.push_back(b), b = parent[b];
          while (a != b) {
            left.push_back(a), a = parent[a];
            right.push_back(b), b = parent[b];
          }
          left.push_back(a);
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          throw PreconditionError("complement is not bipartite: odd cycle of length " + std::to_string(left.size()),
                                  left);
        }
      }
    }
  }
  return coloring_alpha2(g);
}

namespace detail {

std::vector<int> multipartite_on(const Graph& g, const VertexSet& s) {
  auto sub = induced(g, s);
  try {
    return color_complete_multipartite(sub.graph);
  } catch (const PreconditionError& e) {
    std::string msg = "D is not complete multipartite";
    if (e.witness().size() == 3)
      msg += ": " + edge_text(sub.to_host[e.witness()[0]], sub.to_host[e.witness()[1]]) + " with " +
             std::to_string(sub.to_host[e.witness()[2]]);
    throw InvariantFailure(msg);
  }
}

}  // namespace detail

ColoringDerivation color_k23_case(const Graph& g, const PatternEmbedding& k23) {
  if (k23.pattern != PatternName::K23 || !embedding_valid(g, k23))
    throw std::invalid_argument("color_k23_case needs a valid K23 embedding");
  const int n = g.order();
  // The embedding's cycle is C; its fifth vertex lands in X[0].
  C4Partition p = build_partition(g, std::array<int, 4>{k23.map[0], k23.map[1], k23.map[2], k23.map[3]});
  const auto& c = p.c;
  auto cv = [&](std::initializer_list<int> idx) {
    VertexSet s(n);
    for (int i : idx) s.insert(c[i]);
    return s;
  };
  const int omega = clique_number(g);
  detail::ColoringBuilder cb(g);
  std::string branch;
  if (omega <= 2) {
    branch = "k23 triangle-free";
    cb.add_class(p.a[0] | p.x[0] | cv({1, 3}), "S1");
    cb.add_class(p.a[1] | p.x[1] | cv({0, 2}), "S2");
    cb.add_class(p.a[2] | p.t, "S3");
    cb.add_class(p.a[3], "S4");
    if (!(p.b_all() | p.d).empty()) throw InvariantFailure("triangle-free K23 case has B or D vertices");
  } else {
    const int omega_d = clique_number(g, p.d);
    if (omega_d <= omega - 3) {
      branch = "k23 six sets";
      cb.add_class(p.a[0] | p.t | cv({1, 3}), "S1");
      cb.add_class(p.b[0] | p.x[0], "S2");
      cb.add_class(p.a[1] | p.b[1], "S3");
      cb.add_class(p.a[2] | cv({0}), "S4");
      cb.add_class(p.b[2] | p.x[1], "S5");
      cb.add_class(p.a[3] | p.b[3] | cv({2}), "S6");
    } else {
      branch = "k23 five sets";
      VertexSet a0p(n);
      p.a[0].for_each([&](int a) {
        if (g.neighbors(a).intersects(p.x[0])) a0p.insert(a);
      });
      cb.add_class(p.a[1] | p.b[0] | p.b[1] | cv({3}), "S1");
      cb.add_class(p.a[3] | p.b[2] | p.b[3] | cv({1}), "S2");
      cb.add_class(a0p | p.x[1] | cv({2}), "S3");
      cb.add_class((p.a[0] - a0p) | p.x[0], "S4");
      cb.add_class(p.a[2] | p.t | cv({0}), "S5");
    }
    if (!p.d.empty()) cb.add_coloring(p.d, detail::multipartite_on(g, p.d), "D");
  }
  ColoringDerivation out;
  out.coloring = cb.finish();
  out.colors_used = count_colors(out.coloring);
  if (out.colors_used > omega + 3)
    throw InvariantFailure(branch + " used " + std::to_string(out.colors_used) + " colors at omega " +
                           std::to_string(omega));
  out.steps.push_back({"DirectColoring", branch + " colors=" + std::to_string(out.colors_used), n});
  return out;
}

namespace detail {

namespace {

// Runs build(), turning construction failures into "recipe does not apply".
template <class F>
std::optional<std::vector<int>> try_coloring(F&& build) {
  try {
    return build();
  } catch (const InvariantFailure&) {
  } catch (const PreconditionError&) {
  }
  return std::nullopt;
}

}  // namespace

void c4_recipes(const Graph& g, const C4Partition& p, const std::function<bool(GoodCertificate)>& f) {
  const int n = g.order();
  const auto& c = p.c;
  const auto& B = p.b;
  const VertexSet& D = p.d;
  const VertexSet& T = p.t;
  auto cv = [&](std::initializer_list<int> idx) {
    VertexSet s(n);
    for (int i : idx) s.insert(c[i]);
    return s;
  };
  auto one = [&](int v) { return VertexSet(n, {v}); };
  auto anticomplete = [&](const VertexSet& x, const VertexSet& y) {
    bool ok = true;
    x.for_each([&](int v) { ok = ok && !g.neighbors(v).intersects(y); });
    return ok;
  };
  auto complete = [&](const VertexSet& x, const VertexSet& y) {
    bool ok = true;
    x.for_each([&](int v) { ok = ok && y.subset_of(g.neighbors(v) | one(v)); });
    return ok;
  };
  auto emit_np = [&](VertexSet s1, VertexSet s2, VertexSet s3, const char* recipe) {
    return f(NicePartition{{std::move(s1), std::move(s2), std::move(s3)}, recipe});
  };
  auto emit_dc = [&](std::optional<std::vector<int>> col, const char* recipe) {
    return col && f(DirectColoring{std::move(*col), recipe});
  };
  auto cobip = [&](ColoringBuilder& cb, const VertexSet& s, const char* name) {
    if (s.empty()) return;
    auto sub = induced(g, s);
    cb.add_coloring(s, color_cobipartite(sub.graph), name);
  };
  auto multi = [&](ColoringBuilder& cb, const VertexSet& s) {
    if (!s.empty()) cb.add_coloring(s, multipartite_on(g, s), "D");
  };
  const VertexSet Ball = p.b_all();

  // No B at all: the cycle takes two colors, T joins one, D is multipartite.
  if (Ball.empty() && !D.empty()) {
    if (emit_dc(try_coloring([&] {
                  ColoringBuilder cb(g);
                  cb.add_class(cv({0, 2}), "{v0,v2}");
                  cb.add_class(cv({1, 3}) | T, "T+{v1,v3}");
                  multi(cb, D);
                  return cb.finish();
                }),
                "no B blocks"))
      return;
  }

  // B1 and B3 empty.
  if (B[1].empty() && B[3].empty()) {
    if (anticomplete(B[0], B[2])) {
      if (emit_np(cv({0, 2}), cv({1}), T | cv({3}), "empty B pair, split cycle")) return;
    } else if (D.empty()) {
      if (emit_dc(try_coloring([&] {
                    ColoringBuilder cb(g);
                    cobip(cb, B[0] | B[2] | p.cycle(), "B0+B2+C");
                    cb.add_class(T, "T");
                    return cb.finish();
                  }),
                  "empty B pair, co-bipartite"))
        return;
    } else {
      VertexSet s1(n);
      D.for_each([&](int d) {
        if (s1.empty() && (B[0].subset_of(g.neighbors(d)) || B[2].subset_of(g.neighbors(d)))) s1.insert(d);
      });
      if (s1.empty()) {
        // largest stable set of G[B0+B2+D] meeting both D and B0+B2
        VertexSet pool = B[0] | B[2] | D;
        D.for_each([&](int d) {
          ((B[0] | B[2]) - g.neighbors(d)).for_each([&](int b) {
            VertexSet rest = pool - g.neighbors(d) - g.neighbors(b);
            rest.erase(d);
            rest.erase(b);
            auto sub = induced(g, rest);
            VertexSet st = max_stable_set(sub.graph);
            VertexSet cand = VertexSet(n, {d, b});
            st.for_each([&](int i) { cand.insert(sub.to_host[i]); });
            if (cand.size() > s1.size()) s1 = cand;
          });
        });
      }
      if (!s1.empty() && emit_np(s1, T | cv({0, 2}), cv({1, 3}), "empty B pair, stable set through D")) return;
    }
  }

  // B_i complete to B_{i+2} for every i.
  if (complete(B[0], B[2]) && complete(B[1], B[3])) {
    if (!B[3].empty()) {
      if (emit_dc(try_coloring([&] {
                    ColoringBuilder cb(g);
                    for (int i = 0; i < 4; ++i) cb.add_class(B[i] | cv({(i + 2) % 4}), "W");
                    cb.add_class(T, "T");
                    multi(cb, D);
                    return cb.finish();
                  }),
                  "complete opposite B blocks, five classes"))
        return;
    } else if (emit_np(B[0] | cv({2}), B[2] | cv({0}), T | cv({1, 3}), "complete opposite B blocks")) {
      return;
    }
  }

  // A path b1-b2-b3 through B0, B1, B2 with b1 b3 nonadjacent.
  for (int b1 : B[0].members())
    for (int b2 : (B[1] & g.neighbors(b1)).members())
      for (int b3 : ((B[2] & g.neighbors(b2)) - g.neighbors(b1)).members()) {
        if (D.empty()) {
          if (emit_dc(try_coloring([&] {
                        ColoringBuilder cb(g);
                        cobip(cb, Ball | cv({1, 3}), "B+{v1,v3}");
                        cb.add_class(T | cv({0, 2}), "T+{v0,v2}");
                        return cb.finish();
                      }),
                      "B path, no D"))
            return;
          continue;
        }
        VertexSet D1(n), D1p(n), D2(n), D2p(n), D3(n), D3p(n), Dodd(n);
        D.for_each([&](int d) {
          bool s1 = g.adjacent(d, b1), s2 = g.adjacent(d, b2), s3 = g.adjacent(d, b3);
          if (s1 && !s2 && !s3) D1.insert(d);
          else if (!s1 && !s2 && s3) D1p.insert(d);
          else if (s1 && s2 && !s3) D2.insert(d);
          else if (!s1 && s2 && s3) D2p.insert(d);
          else if (s1 && s2 && s3) D3.insert(d);
          else if (!s1 && !s2 && !s3) D3p.insert(d);
          else Dodd.insert(d);
        });
        if (!Dodd.empty()) continue;
        const VertexSet ob1 = B[0] - one(b1), ob2 = B[1] - one(b2), ob3 = B[2] - one(b3);

        if (!D1.empty()) {
          if (!ob1.empty()) {
            bool small = B[1].size() == 1 && B[3].size() <= 1;
            if (emit_dc(try_coloring([&] {
                          ColoringBuilder cb(g);
                          cb.add_singletons(D3);
                          cb.add_class(D3p | one(b1) | one(b3), "D3'+{b1,b3}");
                          cb.add_class(ob1 | ob3, "B0-b1+B2-b3");
                          cb.add_class(D1 | D2p, "D1+D2'");
                          cb.add_class(D2 | D1p, "D2+D1'");
                          if (small) {
                            cb.add_class(B[1] | cv({0}), "B1+v0");
                            cb.add_class(B[3] | cv({2}), "B3+v2");
                            cb.add_class(T | cv({1, 3}), "T+{v1,v3}");
                          } else {
                            cobip(cb, B[1] | B[3], "B1+B3");
                            cb.add_class(T | cv({1, 3}), "T+{v1,v3}");
                            cb.add_class(cv({0, 2}), "{v0,v2}");
                          }
                          return cb.finish();
                        }),
                        "B path, D1 nonempty, B0 larger than b1"))
              return;
          } else if (ob3.empty()) {
            if (emit_dc(try_coloring([&] {
                          ColoringBuilder cb(g);
                          cb.add_class(VertexSet(n, {b1, c[2]}), "{b1,v2}");
                          cb.add_class(VertexSet(n, {b3, c[0]}), "{b3,v0}");
                          cb.add_class(T | cv({1, 3}), "T+{v1,v3}");
                          cobip(cb, B[1] | B[3], "B1+B3");
                          multi(cb, D);
                          return cb.finish();
                        }),
                        "B path, D1 nonempty, B0 and B2 singletons"))
              return;
          } else {
            if (emit_dc(try_coloring([&] {
                          ColoringBuilder cb(g);
                          cb.add_class(VertexSet(n, {b1, c[3]}), "{b1,v3}");
                          cb.add_class(B[3] | cv({1}), "B3+v1");
                          cb.add_class(T | cv({0, 2}), "T+{v0,v2}");
                          cb.add_class(D1 | one(b2), "D1+b2");
                          cb.add_class(ob2 | D3p, "B1-b2+D3'");
                          cobip(cb, B[2] | (D - D1 - D3p), "B2+rest of D");
                          return cb.finish();
                        }),
                        "B path, D1 nonempty, B0 is b1"))
              return;
          }
          continue;
        }
        if (!D1p.empty()) continue;  // mirror labelling handles it

        if (!(D2 | D2p).empty()) {
          if (D2.empty()) continue;  // mirror labelling handles D2'
          const int d = D2.first();
          if (!B[3].empty()) {
            if (emit_np(VertexSet(n, {b2, c[3]}), B[3] | cv({1}), T | cv({0, 2}), "B path, D2 nonempty, B3 nonempty"))
              return;
          } else if (emit_np(VertexSet(n, {b3, d}), VertexSet(n, {b2, c[0]}), T | cv({1, 3}),
                             "B path, D2 nonempty, B3 empty")) {
            return;
          }
          continue;
        }

        if (emit_dc(try_coloring([&] {
                      ColoringBuilder cb(g);
                      cobip(cb, Ball, "B");
                      cb.add_singletons(D3);
                      cb.add_class(D3p, "D3'");
                      cb.add_class(cv({1, 3}), "{v1,v3}");
                      cb.add_class(T | cv({0, 2}), "T+{v0,v2}");
                      return cb.finish();
                    }),
                    "B path, D splits evenly"))
          return;
      }
}

}  // namespace detail

std::optional<GoodCertificate> color_c4_case(const Graph& g, const C4Partition& part) {
  if (part.host_order() != g.order()) throw std::invalid_argument("partition was built for another graph");
  for (int i = 0; i < 4; ++i)
    if (!part.a[i].empty())
      throw PreconditionError("block A" + std::to_string(i) + " is nonempty", part.a[i].members());
  for (int j = 0; j < 2; ++j)
    if (!part.x[j].empty())
      throw PreconditionError("block X" + std::to_string(j) + " is nonempty", part.x[j].members());
  if (auto w = is_free(g, {PatternName::K23, PatternName::BANNER}); !w.free)
    throw PreconditionError("graph contains " + std::string(to_string(w.witness->pattern)), w.witness->map,
                            w.witness->pattern);

  const int omega = clique_number(g);
  detail::CliqueHitting hit(g, omega);
  std::optional<GoodCertificate> out;
  for (const auto& cyc : detail::dihedral(part.c)) {
    detail::c4_recipes(g, build_partition(g, cyc), [&](GoodCertificate cert) {
      bool ok = false;
      if (auto* np = std::get_if<NicePartition>(&cert))
        ok = detail::is_nice_partition(g, np->sets, hit);
      else
        ok = validate_certificate(g, cert, omega);
      if (ok) out = std::move(cert);
      return ok;
    });
    if (out) return out;
  }
  return std::nullopt;
}

}  // namespace chibind
