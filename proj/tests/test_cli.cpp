#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "chibind/extremal.hpp"
#include "chibind/graph_io.hpp"
#include "chibind/patterns.hpp"
#include "cli.hpp"
#include "support/brute.hpp"

using namespace chibind;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("chibind_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& text) const {
    auto p = path / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string at(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("check: P6 is out of the class") {
  TempDir t;
  auto p6 = t.file("p6.txt", write_edge_list(path_graph(6)));
  auto r = cli({"check", "--input", p6, "--format", "edges"});
  CHECK(r.code == 1);
  CHECK(r.out == "not in class: P2_P3 witness=0,1,3,4,5\n");
  auto c5 = t.file("c5.g6", encode_graph6(cycle_graph(5)) + "\n");
  CHECK(cli({"check", "--input", c5}).code == 0);
}

TEST_CASE("extremal: Schlafli stats") {
  auto r = cli({"extremal", "schlafli"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  std::string g6, stats;
  std::getline(is, g6);
  std::getline(is, stats);
  CHECK(decode_graph6(g6) == schlafli());
  CHECK(stats == "n=27 m=216 omega=6 alpha=3 chi=9 bound=9");
  CHECK(cli({"extremal", "nonsense"}).code == 2);
}

TEST_CASE("color then verify") {
  TempDir t;
  for (const char* name : {"schlafli", "clebsch-complement", "grotzsch", "g6", "schlafli-complement+k1"}) {
    CAPTURE(name);
    auto in = t.file("g.g6", encode_graph6(*named_graph(name)));
    auto col = t.at("g.col");
    auto c = cli({"color", "--input", in, "--output", col});
    CHECK(c.code == 0);
    CHECK(c.out.find("step 1: ") == 0);
    auto v = cli({"verify", "--input", in, "--coloring", col});
    CHECK(v.code == 0);
    CHECK(v.out.rfind("proper coloring", 0) == 0);
  }
}

TEST_CASE("color prints the coloring when no output file is given") {
  TempDir t;
  auto in = t.file("c5.g6", encode_graph6(cycle_graph(5)));
  auto r = cli({"color", "--input", in});
  CHECK(r.code == 0);
  CHECK(r.out.find("colors 3\n0 ") != std::string::npos);
  auto p6 = t.file("p6.g6", encode_graph6(path_graph(6)));
  CHECK(cli({"color", "--input", p6}).code == 1);
}

TEST_CASE("verify rejects improper and oversized colorings") {
  TempDir t;
  auto in = t.file("c5.g6", encode_graph6(cycle_graph(5)));
  auto bad = t.file("bad.col", "colors 2\n0 0\n1 1\n2 0\n3 1\n4 0\n");
  auto r = cli({"verify", "--input", in, "--coloring", bad});
  CHECK(r.code == 1);
  CHECK(r.out == "improper: edge 0-4 has both ends colored 0\n");
  auto k2 = t.file("k2.g6", encode_graph6(Graph(2)));
  auto two = t.file("two.col", "colors 2\n0 0\n1 1\n");
  CHECK(cli({"verify", "--input", k2, "--coloring", two}).code == 1);  // omega 1 allows one color
  auto short_col = t.file("short.col", "colors 1\n0 0\n");
  CHECK(cli({"verify", "--input", in, "--coloring", short_col}).code == 2);
}

TEST_CASE("partition report") {
  TempDir t;
  auto in = t.file("k23.g6", encode_graph6(pattern_graph(PatternName::K23)));
  auto r = cli({"partition", "--input", in});
  CHECK(r.code == 0);
  CHECK(r.out.find("X0={4}") != std::string::npos);
  CHECK(r.out.find("R1[i=0]: holds") != std::string::npos);
  auto c5 = t.file("c5.g6", encode_graph6(cycle_graph(5)));
  CHECK(cli({"partition", "--input", c5}).code == 1);
  auto three = t.file("t.txt", "5 7\n0 1\n1 2\n2 3\n0 3\n0 4\n1 4\n2 4\n");
  auto e = cli({"partition", "--input", three, "--format", "edges", "--cycle", "0,1,2,3"});
  CHECK(e.code == 1);
  CHECK(e.out.find("three neighbors") != std::string::npos);
}

TEST_CASE("stats") {
  TempDir t;
  auto in = t.file("c5.g6", encode_graph6(cycle_graph(5)));
  auto r = cli({"stats", "--input", in});
  CHECK(r.code == 0);
  CHECK(r.out == "n=5 m=5 omega=2 alpha=2 chi=3 theta=3\n");
}

TEST_CASE("fuzz output is reproducible") {
  std::vector<std::string> args{"fuzz", "--seed", "9", "--n", "8", "--n-max", "10", "--p-list", "1/4,1/2,3/4",
                                "--count", "25"};
  auto a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  args.push_back("--parallel");
  CHECK(cli(args).out == a.out);
  CHECK(cli({"fuzz", "--count", "0"}).code == 2);
  CHECK(cli({"fuzz", "--p", "7/3"}).code == 2);
  CHECK(cli({"fuzz", "--mode", "sideways"}).code == 2);
}

TEST_CASE("usage and input errors exit 2") {
  TempDir t;
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"check"}).code == 2);
  CHECK(cli({"check", "--input", t.at("missing.g6")}).code == 2);
  auto junk = t.file("junk.g6", "Dh\n");
  auto r = cli({"check", "--input", junk});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") == 0);
  auto edges = t.file("e.txt", "3 1\n0 9\n");
  CHECK(cli({"check", "--input", edges, "--format", "edges"}).code == 2);
  CHECK(cli({"check", "--input", junk, "--format", "adjacency"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("solver timeout exits 3") {
  TempDir t;
  std::mt19937_64 rng(1);
  auto in = t.file("big.g6", encode_graph6(brute::random_graph(110, 0.5, rng)));
  auto r = cli({"stats", "--input", in, "--timeout-ms", "1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("timeout") == 0);
}
