#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chibind/graph.hpp"

namespace chibind {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

std::string encode_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and one trailing newline.
Graph decode_graph6(std::string_view text);

// "n m" then m lines "u v".
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

enum class GraphFormat { graph6, edges };

std::string read_file(const std::string& path);
Graph read_graph_file(const std::string& path, GraphFormat fmt);

// "colors <k>" then one "v c" line per vertex.
std::string write_coloring(std::span<const int> coloring);
std::vector<int> parse_coloring(std::string_view text);

}  // namespace chibind
