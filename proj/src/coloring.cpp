#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "chibind/oracles.hpp"

namespace chibind {

SolverLimits default_limits() {
  SolverLimits lim;
  if (const char* env = std::getenv("CHI_BIND_TIMEOUT_MS")) {
    char* end = nullptr;
    long long ms = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && ms > 0) lim.timeout = std::chrono::milliseconds(ms);
  }
  return lim;
}

namespace {

// DSATUR backtracking for a fixed palette size, with a precolored clique.
class KColoring {
 public:
  KColoring(const Graph& g, const VertexSet& clique, Deadline deadline)
      : g_(g), n_(g.order()), clique_(clique), deadline_(deadline) {}

  // Returns a coloring with at most k colors, or an empty vector.
  std::vector<int> solve(int k) {
    k_ = k;
    color_.assign(n_, -1);
    forbid_.assign(static_cast<std::size_t>(n_) * k, 0);
    sat_.assign(n_, 0);
    colored_ = 0;
    int c = 0;
    for (int v = clique_.first(); v != -1; v = clique_.next(v)) assign(v, c++);
    max_color_ = c - 1;
    if (search()) return color_;
    return {};
  }

  // Plain DSATUR without backtracking, for an upper bound.
  std::vector<int> greedy() {
    k_ = n_;
    color_.assign(n_, -1);
    forbid_.assign(static_cast<std::size_t>(n_) * k_, 0);
    sat_.assign(n_, 0);
    colored_ = 0;
    int c = 0;
    for (int v = clique_.first(); v != -1; v = clique_.next(v)) assign(v, c++);
    while (colored_ < n_) {
      int v = pick();
      int col = 0;
      while (forbid_[idx(v, col)]) ++col;
      assign(v, col);
    }
    return color_;
  }

 private:
  std::size_t idx(int v, int c) const { return static_cast<std::size_t>(v) * k_ + c; }

  void assign(int v, int c) {
    color_[v] = c;
    ++colored_;
    g_.neighbors(v).for_each([&](int u) {
      if (forbid_[idx(u, c)]++ == 0) ++sat_[u];
    });
  }

  void unassign(int v) {
    int c = color_[v];
    color_[v] = -1;
    --colored_;
    g_.neighbors(v).for_each([&](int u) {
      if (--forbid_[idx(u, c)] == 0) --sat_[u];
    });
  }

  int pick() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] != -1) continue;
      if (best == -1 || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best)))
        best = v;
    }
    return best;
  }

  bool search() {
    if (colored_ == n_) return true;
    if ((++nodes_ & 1023) == 0 && deadline_.expired())
      throw InexactError("chromatic number search exceeded its time budget");
    int v = pick();
    if (sat_[v] >= k_) return false;
    const int limit = std::min(k_ - 1, max_color_ + 1);
    for (int c = 0; c <= limit; ++c) {
      if (forbid_[idx(v, c)]) continue;
      int saved = max_color_;
      max_color_ = std::max(max_color_, c);
      assign(v, c);
      if (search()) return true;
      unassign(v);
      max_color_ = saved;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  VertexSet clique_;
  Deadline deadline_;
  int k_ = 0;
  int max_color_ = -1;
  int colored_ = 0;
  long long nodes_ = 0;
  std::vector<int> color_;
  std::vector<int> forbid_;
  std::vector<int> sat_;
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g, const SolverLimits& limits) {
  const int n = g.order();
  if (n > limits.desk_limit)
    std::cerr << "warning: exact coloring on " << n << " vertices exceeds the desk-scale limit of "
              << limits.desk_limit << '\n';
  if (n == 0) return {0, {}};
  Deadline deadline = Deadline::after(limits.timeout);

  // Universal vertices each need a private color.
  std::vector<int> universal, rest;
  for (int v = 0; v < n; ++v) (g.degree(v) == n - 1 ? universal : rest).push_back(v);
  ChromaticResult out;
  out.coloring.assign(n, -1);
  int base = 0;
  if (!rest.empty()) {
    auto sub = induced(g, std::span<const int>(rest));
    const Graph& h = sub.graph;
    VertexSet clique = max_clique(h);
    int alpha = stability_number(h);
    int lb = std::max(clique.size(), (h.order() + alpha - 1) / alpha);
    KColoring solver(h, clique, deadline);
    std::vector<int> best = solver.greedy();
    int ub = count_colors(best);
    for (int k = lb; k < ub; ++k) {
      auto col = solver.solve(k);
      if (!col.empty()) {
        best = std::move(col);
        break;
      }
    }
    base = count_colors(best);
    for (std::size_t i = 0; i < rest.size(); ++i) out.coloring[sub.to_host[i]] = best[i];
  }
  for (std::size_t i = 0; i < universal.size(); ++i) out.coloring[universal[i]] = base + static_cast<int>(i);
  out.chi = base + static_cast<int>(universal.size());
  return out;
}

ChromaticResult clique_cover(const Graph& g, const SolverLimits& limits) {
  return chromatic_number(complement(g), limits);
}

int chi_alpha2(const Graph& g) {
  if (g.order() == 0) return 0;
  int alpha = stability_number(g);
  if (alpha >= 3)
    throw std::domain_error("chi_alpha2 needs stability number at most 2, got " +
                            std::to_string(alpha));
  return g.order() - static_cast<int>(max_matching(complement(g)).size());
}

std::vector<int> coloring_alpha2(const Graph& g) {
  chi_alpha2(g);  // precondition
  std::vector<int> color(g.order(), -1);
  std::vector<int> partner(g.order(), -1);
  for (auto [u, v] : max_matching(complement(g))) {
    partner[u] = v;
    partner[v] = u;
  }
  int next = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (color[v] != -1) continue;
    color[v] = next;
    if (partner[v] != -1) color[partner[v]] = next;
    ++next;
  }
  return color;
}

ExactStats exact_stats(const Graph& g, const SolverLimits& limits) {
  ExactStats s;
  s.omega = clique_number(g);
  s.alpha = stability_number(g);
  s.chi = chromatic_number(g, limits).chi;
  s.theta = clique_cover(g, limits).chi;
  return s;
}

}  // namespace chibind
