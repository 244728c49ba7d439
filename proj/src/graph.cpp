#include "chibind/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace chibind {

namespace {

std::size_t word_count(int capacity) { return (static_cast<std::size_t>(capacity) + 63) / 64; }

void check_same(const VertexSet& a, const VertexSet& b) {
  if (a.capacity() != b.capacity())
    throw std::invalid_argument("vertex sets over different hosts");
}

}  // namespace

VertexSet::VertexSet(int capacity) : capacity_(capacity), words_(word_count(capacity), 0) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
}

VertexSet::VertexSet(int capacity, std::initializer_list<int> members) : VertexSet(capacity) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int capacity, std::span<const int> members) : VertexSet(capacity) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int capacity) {
  VertexSet s(capacity);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (capacity & 63) s.words_.back() = (std::uint64_t{1} << (capacity & 63)) - 1;
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= capacity_)
    throw std::domain_error("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(capacity_ - 1));
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= capacity_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
  return -1;
}

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= capacity_) return -1;
  if (start < 0) start = 0;
  std::size_t w = start >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits) return static_cast<int>(w * 64 + std::countr_zero(bits));
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

int VertexSet::intersection_size(const VertexSet& o) const {
  check_same(*this, o);
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

Graph::Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int n) : n_(n), adj_(n, VertexSet(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.order()), adj_(g.adj_) {}

void GraphBuilder::check(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " outside 0.." + std::to_string(n_ - 1));
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

void GraphBuilder::add_edge(int u, int v) {
  check(u, v);
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void GraphBuilder::remove_edge(int u, int v) {
  check(u, v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.adj_ = adj_;
  int deg = 0;
  for (const auto& s : adj_) deg += s.size();
  g.m_ = deg / 2;
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

InducedSubgraph induced(const Graph& g, std::span<const int> s) {
  std::vector<int> verts(s.begin(), s.end());
  for (int v : verts)
    if (v < 0 || v >= g.order())
      throw std::domain_error("induced: vertex " + std::to_string(v) + " not in graph of order " +
                              std::to_string(g.order()));
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const int k = static_cast<int>(verts.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(verts[i], verts[j])) b.add_edge(i, j);
  return {b.build(), std::move(verts)};
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  if (s.capacity() > g.order()) {
    int bad = s.next(g.order() - 1);
    if (bad != -1)
      throw std::domain_error("induced: vertex " + std::to_string(bad) +
                              " not in graph of order " + std::to_string(g.order()));
  }
  auto m = s.members();
  return induced(g, std::span<const int>(m));
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s) {
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (!s.contains(v)) keep.push_back(v);
  return induced(g, std::span<const int>(keep));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  GraphBuilder out(na + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(na + u, na + v);
  return out.build();
}

Graph join(const Graph& a, const Graph& b) {
  const int na = a.order();
  GraphBuilder out(na + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(na + u, na + v);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < b.order(); ++v) out.add_edge(u, na + v);
  return out.build();
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

bool is_stable(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const int k = s.size();
  bool ok = true;
  s.for_each([&](int v) {
    if (ok && g.neighbors(v).intersection_size(s) != k - 1) ok = false;
  });
  return ok;
}

bool is_proper_coloring(const Graph& g, std::span<const int> coloring) {
  if (static_cast<int>(coloring.size()) != g.order()) return false;
  for (int c : coloring)
    if (c < 0) return false;
  for (auto [u, v] : g.edges())
    if (coloring[u] == coloring[v]) return false;
  return true;
}

int count_colors(std::span<const int> coloring) {
  std::vector<int> c(coloring.begin(), coloring.end());
  std::sort(c.begin(), c.end());
  return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
}

}  // namespace chibind
