#include <doctest.h>

#include <random>

#include "chibind/graph.hpp"
#include "chibind/graph_io.hpp"
#include "support/brute.hpp"

using namespace chibind;

TEST_CASE("vertex set basics") {
  VertexSet s(70, {0, 5, 64, 69});
  CHECK(s.size() == 4);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK(s.first() == 0);
  CHECK(s.next(5) == 64);
  CHECK(s.next(69) == -1);
  CHECK(s.members() == std::vector<int>{0, 5, 64, 69});
  s.erase(5);
  CHECK(s.size() == 3);
  CHECK_THROWS_AS(s.insert(70), std::domain_error);

  VertexSet t(70, {0, 1, 69});
  CHECK((s & t).members() == std::vector<int>{0, 69});
  CHECK((s | t).size() == 4);
  CHECK((s - t).members() == std::vector<int>{64});
  CHECK(s.intersection_size(t) == 2);
  CHECK(VertexSet(70, {0, 69}).subset_of(s));
  CHECK_THROWS(s & VertexSet(10));
  CHECK(VertexSet(0).empty());
}

TEST_CASE("graph construction and queries") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS(Graph::from_edges(3, {{0, 0}}));
  CHECK_THROWS(Graph::from_edges(3, {{0, 3}}));

  GraphBuilder b(g);
  b.remove_edge(1, 2);
  b.add_edge(0, 3);
  Graph h = b.build();
  CHECK(h.size() == 3);
  CHECK(h.adjacent(3, 0));
  CHECK_FALSE(h.adjacent(1, 2));
}

TEST_CASE("complement, induced, joins") {
  Graph c5 = cycle_graph(5);
  CHECK(complement(c5).size() == 5);
  CHECK(complement(complement(c5)) == c5);

  auto sub = induced(c5, VertexSet(5, {0, 1, 3}));
  CHECK(sub.graph.order() == 3);
  CHECK(sub.graph.size() == 1);
  CHECK(sub.to_host == std::vector<int>{0, 1, 3});
  std::vector<int> bad{0, 7};
  CHECK_THROWS_AS(induced(c5, std::span<const int>(bad)), std::domain_error);

  auto rest = remove_vertices(c5, VertexSet(5, {2}));
  CHECK(rest.graph.order() == 4);
  CHECK(rest.graph.size() == 3);
  CHECK(rest.to_host == std::vector<int>{0, 1, 3, 4});

  Graph u = disjoint_union(complete_graph(2), complete_graph(3));
  CHECK(u.order() == 5);
  CHECK(u.size() == 4);
  Graph j = join(complete_graph(2), Graph(3));
  CHECK(j.size() == 1 + 6);
  CHECK(complete_graph(4).size() == 6);
  CHECK(path_graph(6).size() == 5);
}

TEST_CASE("stable sets, cliques, colorings") {
  Graph c4 = cycle_graph(4);
  CHECK(is_stable(c4, VertexSet(4, {0, 2})));
  CHECK_FALSE(is_stable(c4, VertexSet(4, {0, 1})));
  CHECK(is_clique(c4, VertexSet(4, {0, 1})));
  std::vector<int> good{0, 1, 0, 1}, bad{0, 0, 1, 1}, short_col{0, 1};
  CHECK(is_proper_coloring(c4, good));
  CHECK_FALSE(is_proper_coloring(c4, bad));
  CHECK_FALSE(is_proper_coloring(c4, short_col));
  CHECK(count_colors(good) == 2);
}

TEST_CASE("graph6 known encodings") {
  // Reference strings from the graph6 format description.
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(complete_graph(2)) == "A_");
  CHECK(encode_graph6(path_graph(3)) == "Bg");
  CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
  CHECK(decode_graph6("Dhc") == cycle_graph(5));
  CHECK(decode_graph6("Bg\n") == path_graph(3));
}

TEST_CASE("graph6 round trip, including the long header") {
  std::mt19937_64 rng(5);
  for (int n : {0, 1, 2, 7, 12, 62, 63, 64, 100}) {
    Graph g = brute::random_graph(n, 0.4, rng);
    std::string s = encode_graph6(g);
    CHECK(decode_graph6(s) == g);
    if (n >= 63) CHECK(s[0] == '~');
  }
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(decode_graph6(""), ParseError);
  CHECK_THROWS_AS(decode_graph6("Dh"), ParseError);    // truncated
  CHECK_THROWS_AS(decode_graph6("Dhcc"), ParseError);  // trailing byte
  CHECK_THROWS_AS(decode_graph6("D\x01c"), ParseError);
  CHECK_THROWS_AS(decode_graph6("Bh"), ParseError);  // nonzero padding
}

TEST_CASE("edge lists and coloring files") {
  Graph g = cycle_graph(5);
  CHECK(parse_edge_list(write_edge_list(g)) == g);
  CHECK(write_edge_list(path_graph(3)) == "3 2\n0 1\n1 2\n");
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n7"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("x"), ParseError);

  std::vector<int> col{0, 1, 0, 1, 2};
  CHECK(write_coloring(col) == "colors 3\n0 0\n1 1\n2 0\n3 1\n4 2\n");
  CHECK(parse_coloring(write_coloring(col)) == col);
  CHECK_THROWS_AS(parse_coloring("colors 3\n0 0\n1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("colors 2\n0 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("0 0\n"), ParseError);
}
