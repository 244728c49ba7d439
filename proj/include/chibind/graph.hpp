#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace chibind {

// Dynamic bitset over {0..capacity-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity);
  VertexSet(int capacity, std::initializer_list<int> members);
  VertexSet(int capacity, std::span<const int> members);

  static VertexSet full(int capacity);

  int capacity() const { return capacity_; }
  bool contains(int v) const {
    return v >= 0 && v < capacity_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }
  void insert(int v);
  void erase(int v);
  void clear();

  int size() const;
  bool empty() const;
  // Lowest member, or -1.
  int first() const;
  // Lowest member strictly greater than v, or -1.
  int next(int v) const;
  std::vector<int> members() const;

  bool intersects(const VertexSet& o) const;
  bool subset_of(const VertexSet& o) const;
  int intersection_size(const VertexSet& o) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& o) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);  // edgeless

  // Throws std::invalid_argument on loops or out-of-range endpoints.
  // Duplicate edges are tolerated.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  int size() const { return m_; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::full(n_); }
  // Edges (u,v) with u<v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);
  int order() const { return n_; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  Graph build() const;

 private:
  void check(int u, int v) const;
  int n_;
  std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_host;  // subgraph vertex i is host vertex to_host[i]
};

// Order-preserving relabeling. Throws std::domain_error on vertices >= n.
InducedSubgraph induced(const Graph& g, const VertexSet& s);
InducedSubgraph induced(const Graph& g, std::span<const int> s);
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s);

Graph disjoint_union(const Graph& a, const Graph& b);
// a + b plus every edge between them; b's vertices come after a's.
Graph join(const Graph& a, const Graph& b);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

bool is_stable(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_proper_coloring(const Graph& g, std::span<const int> coloring);
// Number of distinct colors; colors must be non-negative.
int count_colors(std::span<const int> coloring);

}  // namespace chibind
