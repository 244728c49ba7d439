#include "chibind/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace chibind {

namespace {

constexpr std::string_view kG6Header = ">>graph6<<";

// Whitespace tokenizer that remembers byte offsets for error messages.
class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  std::size_t offset() const { return pos_; }

  long long integer(const char* what) {
    skip();
    if (pos_ >= text_.size()) throw ParseError(std::string("expected ") + what, pos_);
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || (ptr != end && !is_space(*ptr)))
      throw ParseError(std::string("malformed ") + what, pos_);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::string_view word(const char* what) {
    skip();
    if (pos_ >= text_.size()) throw ParseError(std::string("expected ") + what, pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  void skip() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw std::invalid_argument("graph6: order too large");
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kG6Header.size()) == kG6Header) {
    base = kG6Header.size();
    text.remove_prefix(base);
  }
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", base);

  auto sixbits = [&](std::size_t i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + i);
    return static_cast<int>(c - 63);
  };

  long long n;
  std::size_t pos;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = sixbits(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated size header", base + text.size());
    if (static_cast<unsigned char>(text[1]) == 126)
      throw ParseError("graph6: orders above 258047 are not supported", base + 1);
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sixbits(i);
    pos = 4;
  }

  const long long pairs = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos < need)
    throw ParseError("graph6: truncated adjacency data, expected " + std::to_string(need) +
                         " bytes",
                     base + text.size());
  if (text.size() - pos > need) throw ParseError("graph6: trailing bytes", base + pos + need);

  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      int bit = 5 - static_cast<int>(k % 6);
      if ((sixbits(byte) >> bit) & 1) b.add_edge(i, j);
    }
  }
  if (pairs % 6) {
    int pad = sixbits(pos + need - 1) & ((1 << (6 - pairs % 6)) - 1);
    if (pad) throw ParseError("graph6: nonzero padding bits", base + pos + need - 1);
  }
  return b.build();
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_edge_list(std::string_view text) {
  Tokens tk(text);
  std::size_t at = tk.offset();
  long long n = tk.integer("vertex count");
  if (n < 0 || n > 100000) throw ParseError("edge list: bad vertex count", at);
  at = tk.offset();
  long long m = tk.integer("edge count");
  if (m < 0) throw ParseError("edge list: bad edge count", at);
  GraphBuilder b(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    if (tk.done()) throw ParseError("edge list: expected " + std::to_string(m) + " edges", tk.offset());
    at = tk.offset();
    long long u = tk.integer("edge endpoint");
    long long v = tk.integer("edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw ParseError("edge list: invalid edge " + std::to_string(u) + " " + std::to_string(v), at);
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!tk.done()) throw ParseError("edge list: trailing content", tk.offset());
  return b.build();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph read_graph_file(const std::string& path, GraphFormat fmt) {
  std::string text = read_file(path);
  return fmt == GraphFormat::graph6 ? decode_graph6(text) : parse_edge_list(text);
}

std::string write_coloring(std::span<const int> coloring) {
  std::ostringstream os;
  os << "colors " << count_colors(coloring) << '\n';
  for (std::size_t v = 0; v < coloring.size(); ++v) os << v << ' ' << coloring[v] << '\n';
  return os.str();
}

std::vector<int> parse_coloring(std::string_view text) {
  Tokens tk(text);
  std::size_t at = tk.offset();
  if (tk.word("header") != "colors") throw ParseError("coloring: expected 'colors'", at);
  at = tk.offset();
  long long k = tk.integer("color count");
  if (k < 0) throw ParseError("coloring: bad color count", at);
  std::vector<int> color;
  while (!tk.done()) {
    at = tk.offset();
    long long v = tk.integer("vertex");
    long long c = tk.integer("color");
    if (v != static_cast<long long>(color.size()))
      throw ParseError("coloring: expected vertex " + std::to_string(color.size()), at);
    if (c < 0) throw ParseError("coloring: negative color", at);
    color.push_back(static_cast<int>(c));
  }
  if (count_colors(color) != k)
    throw ParseError("coloring: header says " + std::to_string(k) + " colors but " +
                         std::to_string(count_colors(color)) + " are used",
                     0);
  return color;
}

}  // namespace chibind
