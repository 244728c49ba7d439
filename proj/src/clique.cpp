#include <algorithm>

#include "chibind/oracles.hpp"

namespace chibind {

namespace {

// Greedy sequential coloring of p in ascending order; returns class count.
int color_bound(const Graph& g, VertexSet p) {
  int classes = 0;
  while (!p.empty()) {
    ++classes;
    VertexSet avail = p;
    for (int v = avail.first(); v != -1; v = avail.next(v)) {
      p.erase(v);
      avail -= g.neighbors(v);
    }
  }
  return classes;
}

struct CliqueSearch {
  const Graph& g;
  VertexSet best;
  int best_size = 0;
  std::vector<int> current;

  void expand(VertexSet p) {
    const int r = static_cast<int>(current.size());
    if (p.empty()) {
      if (r > best_size) {
        best_size = r;
        best = VertexSet(g.order(), std::span<const int>(current));
      }
      return;
    }
    if (r + p.size() <= best_size) return;
    if (r + color_bound(g, p) <= best_size) return;
    for (int v = p.first(); v != -1; v = p.next(v)) {
      if (r + p.size() <= best_size) return;
      current.push_back(v);
      expand(p & g.neighbors(v));
      current.pop_back();
      p.erase(v);
    }
  }
};

}  // namespace

VertexSet max_clique(const Graph& g) {
  CliqueSearch s{g, VertexSet(g.order()), 0, {}};
  s.expand(g.vertices());
  return s.best;
}

int clique_number(const Graph& g) { return max_clique(g).size(); }

int clique_number(const Graph& g, const VertexSet& within) {
  CliqueSearch s{g, VertexSet(g.order()), 0, {}};
  s.expand(within);
  return s.best_size;
}

VertexSet max_stable_set(const Graph& g) { return max_clique(complement(g)); }

int stability_number(const Graph& g) { return max_stable_set(g).size(); }

std::vector<VertexSet> maximal_cliques(const Graph& g, int min_size) {
  std::vector<VertexSet> out;
  std::vector<int> r;
  auto bk = [&](auto&& self, VertexSet p, VertexSet x) -> void {
    if (p.empty()) {
      if (x.empty() && static_cast<int>(r.size()) >= min_size)
        out.emplace_back(g.order(), std::span<const int>(r));
      return;
    }
    if (static_cast<int>(r.size()) + p.size() < min_size) return;
    // pivot: vertex of p|x with most neighbours in p
    int pivot = -1, most = -1;
    (p | x).for_each([&](int u) {
      int c = p.intersection_size(g.neighbors(u));
      if (c > most) {
        most = c;
        pivot = u;
      }
    });
    VertexSet cand = p - g.neighbors(pivot);
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
      r.push_back(v);
      self(self, p & g.neighbors(v), x & g.neighbors(v));
      r.pop_back();
      p.erase(v);
      x.insert(v);
    }
  };
  bk(bk, g.vertices(), VertexSet(g.order()));
  return out;
}

}  // namespace chibind
