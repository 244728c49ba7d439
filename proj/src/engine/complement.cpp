#include <algorithm>
#include <set>

#include "internal.hpp"

namespace chibind {

namespace {

constexpr int kExactBlock = 16;

// Parts of a clique cover of h: matching cover on y (h[y] bipartite), then
// each block minus y covered on its own (exactly when small), then greedy
// maximum cliques on what is left. Returns part index per vertex.
std::vector<int> cover_with(const Graph& h, const VertexSet& y, const std::vector<VertexSet>& blocks = {}) {
  const int n = h.order();
  std::vector<int> part(n, -1);
  int k = 0;
  if (!y.empty()) {
    auto sub = induced(h, y);
    std::vector<int> partner(sub.graph.order(), -1);
    for (auto [a, b] : max_matching(sub.graph)) {
      partner[a] = b;
      partner[b] = a;
    }
    for (int i = 0; i < sub.graph.order(); ++i) {
      if (part[sub.to_host[i]] != -1) continue;
      part[sub.to_host[i]] = k;
      if (partner[i] != -1) part[sub.to_host[partner[i]]] = k;
      ++k;
    }
  }
  VertexSet rest = h.vertices() - y;
  for (const auto& block : blocks) {
    VertexSet piece = block & rest;
    if (piece.empty() || piece.size() > kExactBlock) continue;
    auto sub = induced(h, piece);
    SolverLimits lim;
    lim.timeout = std::chrono::milliseconds(2000);
    std::vector<int> cover;
    try {
      cover = clique_cover(sub.graph, lim).coloring;
    } catch (const InexactError&) {
      continue;
    }
    for (int i = 0; i < sub.graph.order(); ++i) part[sub.to_host[i]] = k + cover[i];
    k += count_colors(cover);
    rest -= piece;
  }
  while (!rest.empty()) {
    auto sub = induced(h, rest);
    VertexSet q = max_clique(sub.graph);
    q.for_each([&](int i) {
      part[sub.to_host[i]] = k;
      rest.erase(sub.to_host[i]);
    });
    ++k;
  }
  return part;
}

bool bipartite(const Graph& h, const VertexSet& y) {
  auto sub = induced(h, y);
  const Graph& b = sub.graph;
  std::vector<int> side(b.order(), -1);
  for (int s = 0; s < b.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = b.neighbors(v).first(); u != -1; u = b.neighbors(v).next(u)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

constexpr std::size_t kMaxCycles = 32;

}  // namespace

std::optional<ColoringDerivation> color_via_complement(const Graph& g) {
  const int n = g.order();
  ColoringDerivation out;
  if (n == 0) return out;
  const int limit = bound(clique_number(g));
  const Graph h = complement(g);

  auto accept = [&](std::vector<int> col, const std::string& how) -> std::optional<ColoringDerivation> {
    if (!is_proper_coloring(g, col)) throw InvariantFailure("complement cover is not a coloring: " + how);
    const int k = count_colors(col);
    if (k > limit) return std::nullopt;
    out.coloring = std::move(col);
    out.colors_used = k;
    out.steps.push_back({"ComplementCover", how + " parts=" + std::to_string(k), n});
    return out;
  };

  if (clique_number(h) <= 2) return accept(coloring_alpha2(g), "matching cover of the complement");

  // Bipartite pieces of the complement's C4 partitions get matching covers.
  std::vector<int> best = cover_with(h, VertexSet(n));
  std::string best_how = "greedy cliques of the complement";
  std::set<std::vector<int>> seen;
  std::size_t cycles = 0;
  for (const auto& emb : distinct_c4s(h)) {
    if (++cycles > kMaxCycles) break;
    C4Partition p;
    try {
      p = build_partition(h, emb);
    } catch (const ThreeNeighborError&) {
      continue;
    }
    VertexSet cyc = p.cycle();
    std::vector<VertexSet> blocks;
    for (int i = 0; i < 4; ++i) blocks.push_back(p.a[i] | p.t);
    for (int j = 0; j < 2; ++j) blocks.push_back(p.x[j] | p.t);
    for (int i = 0; i < 4; ++i) blocks.push_back(p.b[i]);
    blocks.push_back(VertexSet(n, {p.c[0], p.c[2]}));
    blocks.push_back(VertexSet(n, {p.c[1], p.c[3]}));
    // Cycle, B, D and T together; each A pair with the opposite X.
    std::vector<VertexSet> cover_blocks{cyc | p.b_all() | p.d | p.t, p.a[0] | p.a[2] | p.x[1],
                                        p.a[1] | p.a[3] | p.x[0]};
    std::vector<VertexSet> ys{VertexSet(n)};
    for (std::size_t a = 0; a < blocks.size(); ++a)
      for (std::size_t b = a + 1; b < blocks.size(); ++b) ys.push_back(blocks[a] | blocks[b]);
    for (int j = 0; j < 2; ++j) ys.push_back(cyc | p.a_all() | p.x[j] | p.t);
    for (const auto& y : ys) {
      if (!seen.insert(y.members()).second || !bipartite(h, y)) continue;
      for (bool by_blocks : {false, true}) {
        auto part = by_blocks ? cover_with(h, y, cover_blocks) : cover_with(h, y);
        if (count_colors(part) < count_colors(best)) {
          best = std::move(part);
          best_how = y.empty() ? "block covers of the complement"
                     : by_blocks ? "matching on a bipartite block, block covers of the rest"
                                 : "matching on a bipartite block of the complement";
        }
      }
    }
  }
  return accept(std::move(best), best_how);
}

}  // namespace chibind
