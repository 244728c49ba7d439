#include <algorithm>

#include "internal.hpp"

namespace chibind {

namespace {

int max_color(const std::vector<int>& col) {
  int m = -1;
  for (int c : col) m = std::max(m, c);
  return m;
}

class Recursion {
 public:
  Recursion(const EngineOptions& opt, ColoringDerivation& out) : opt_(opt), out_(out) {}

  // Coloring of g; host[i] is the input label of vertex i (for the trace).
  std::vector<int> run(const Graph& g, const std::vector<int>& host) {
    const int n = g.order();
    if (n == 0) return {};
    const int omega = clique_number(g);
    const int limit = bound(omega);

    if (omega <= 2) {
      auto r = chromatic_number(g, opt_.limits);
      record("SmallOmega", "exact colors=" + std::to_string(r.chi), n);
      if (r.chi > limit) throw InvariantFailure("omega " + std::to_string(omega) + " graph needs " + std::to_string(r.chi));
      return r.coloring;
    }

    for (int v = 0; v < n; ++v)
      if (g.degree(v) == n - 1) {
        record("Universal", "u=" + std::to_string(host[v]), n);
        auto col = minus(g, host, VertexSet(n, {v}));
        col[v] = max_color(col) + 1;
        return checked(g, col);
      }

    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        int small = -1, big = -1;
        if (g.neighbors(u).subset_of(g.neighbors(v))) small = u, big = v;
        else if (g.neighbors(v).subset_of(g.neighbors(u))) small = v, big = u;
        if (small == -1) continue;
        record("Comparable", "u=" + std::to_string(host[small]) + " under v=" + std::to_string(host[big]), n);
        auto col = minus(g, host, VertexSet(n, {small}));
        col[small] = col[big];
        return checked(g, col);
      }

    for (int u = 0; u < n; ++u) {
      if (g.degree(u) > omega + 2) continue;
      record("NiceVertex", "u=" + std::to_string(host[u]) + " deg=" + std::to_string(g.degree(u)), n);
      auto col = minus(g, host, VertexSet(n, {u}));
      std::vector<char> taken(limit, 0);
      g.neighbors(u).for_each([&](int w) {
        if (col[w] < limit) taken[col[w]] = 1;
      });
      int free = std::find(taken.begin(), taken.end(), 0) - taken.begin();
      if (free >= limit) throw InvariantFailure("no free color for nice vertex " + std::to_string(host[u]));
      col[u] = free;
      return checked(g, col);
    }

    detail::CliqueHitting hit(g, omega);
    // Below omega 10 (except 3, 4) a nice partition only helps if the
    // recursion happens to come in under the bound; try it a limited number of times.
    const bool safe = bound(omega - 2) + 3 <= limit;
    int attempts = safe ? n : opt_.unsafe_partition_attempts;
    std::optional<std::vector<int>> done;
    auto attempt = [&](const NicePartition& np) {
      if (attempts <= 0) return true;
      --attempts;
      done = via_partition(g, host, np, limit);
      return done.has_value() || attempts <= 0;
    };
    detail::closed_form_partitions(g, hit, attempt);
    if (!done && attempts > 0)
      if (auto np = detail::greedy_nice_partition(g, omega, hit)) attempt(*np);
    if (done) return *done;

    if (auto k23 = find_induced(g, PatternName::K23)) {
      auto d = color_k23_case(g, *k23);
      if (d.colors_used <= limit) {
        record("DirectColoring", d.steps.front().payload, n);
        return checked(g, d.coloring);
      }
    } else if (is_free(g, {PatternName::BANNER}).free) {
      for (const auto& emb : distinct_c4s(g)) {
        auto cert = color_c4_case(g, build_partition(g, emb));
        if (!cert) continue;
        if (auto* dc = std::get_if<DirectColoring>(&*cert)) {
          record("DirectColoring", dc->recipe + " colors=" + std::to_string(count_colors(dc->coloring)), n);
          return checked(g, dc->coloring);
        }
        if (auto col = via_partition(g, host, std::get<NicePartition>(*cert), limit)) return *col;
      }
    }

    if (auto d = color_via_complement(g)) {
      record(d->steps.front().kind, d->steps.front().payload, n);
      return checked(g, d->coloring);
    }

    auto r = chromatic_number(g, opt_.limits);
    ++out_.exact_fallbacks;
    record("ExactFallback", "colors=" + std::to_string(r.chi), n);
    if (r.chi > limit)
      throw InvariantFailure("exact coloring needs " + std::to_string(r.chi) + " colors, above the bound " +
                             std::to_string(limit) + " at omega " + std::to_string(omega));
    return r.coloring;
  }

 private:
  void record(std::string kind, std::string payload, int n) {
    out_.steps.push_back({std::move(kind), std::move(payload), n});
  }

  std::vector<int> checked(const Graph& g, std::vector<int> col) {
    if (!is_proper_coloring(g, col)) throw InvariantFailure("improper coloring after a splice");
    std::vector<int> remap(g.order() + 1, -1);
    int k = 0;
    for (int& c : col) {
      if (remap[c] == -1) remap[c] = k++;
      c = remap[c];
    }
    return col;
  }

  // Colors g - s recursively; the result is lifted back with -1 on s.
  std::vector<int> minus(const Graph& g, const std::vector<int>& host, const VertexSet& s) {
    auto sub = remove_vertices(g, s);
    std::vector<int> sub_host(sub.to_host.size());
    for (std::size_t i = 0; i < sub.to_host.size(); ++i) sub_host[i] = host[sub.to_host[i]];
    auto child = run(sub.graph, sub_host);
    std::vector<int> col(g.order(), -1);
    for (std::size_t i = 0; i < child.size(); ++i) col[sub.to_host[i]] = child[i];
    return col;
  }

  std::optional<std::vector<int>> via_partition(const Graph& g, const std::vector<int>& host, const NicePartition& np,
                                                int limit) {
    const std::size_t mark = out_.steps.size();
    const int fallbacks = out_.exact_fallbacks;
    std::string payload;
    for (int i = 0; i < 3; ++i) {
      payload += "S" + std::to_string(i + 1) + "={";
      bool first = true;
      np.sets[i].for_each([&](int v) {
        payload += (first ? "" : ",") + std::to_string(host[v]);
        first = false;
      });
      payload += "} ";
    }
    record("NicePartition", payload + "via " + np.recipe, g.order());
    VertexSet all = np.sets[0] | np.sets[1] | np.sets[2];
    auto col = minus(g, host, all);
    int next = max_color(col) + 1;
    for (const auto& s : np.sets) {
      if (s.empty()) continue;
      s.for_each([&](int v) { col[v] = next; });
      ++next;
    }
    if (next > limit) {
      out_.steps.resize(mark);
      out_.exact_fallbacks = fallbacks;
      return std::nullopt;
    }
    return checked(g, col);
  }

  const EngineOptions& opt_;
  ColoringDerivation& out_;
};

}  // namespace

ColoringDerivation color(const Graph& g, const EngineOptions& opt) {
  if (opt.check_class)
    if (auto w = in_class(g); !w.free) throw NotInClassError(*w.witness);
  ColoringDerivation out;
  std::vector<int> host(g.order());
  for (int v = 0; v < g.order(); ++v) host[v] = v;
  out.coloring = Recursion(opt, out).run(g, host);
  if (!is_proper_coloring(g, out.coloring)) throw InvariantFailure("final coloring is improper");
  out.colors_used = count_colors(out.coloring);
  if (g.order() > 0 && opt.check_class && out.colors_used > bound(clique_number(g)))
    throw InvariantFailure("coloring uses " + std::to_string(out.colors_used) + " colors, above the bound");
  return out;
}

}  // namespace chibind
