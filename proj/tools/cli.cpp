#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chibind/c4_partition.hpp"
#include "chibind/engine.hpp"
#include "chibind/extremal.hpp"
#include "chibind/graph_io.hpp"
#include "chibind/harness.hpp"
#include "chibind/patterns.hpp"

namespace chibind {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string describe(const PatternEmbedding& w) {
  return std::string(to_string(w.pattern)) + " witness=" + join_ints(w.map);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("cannot write " + path);
}

struct Common {
  std::string input;
  std::string format = "graph6";
  std::string output;
  long long timeout_ms = -1;

  void attach(CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", input, "graph file");
    if (needs_input) in->required();
    sub->add_option("--format", format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));
    sub->add_option("--timeout-ms", timeout_ms, "exact solver timeout (default CHI_BIND_TIMEOUT_MS or 120000)")
        ->check(CLI::PositiveNumber);
  }
  SolverLimits limits() const {
    SolverLimits l = default_limits();
    if (timeout_ms > 0) l.timeout = std::chrono::milliseconds(timeout_ms);
    return l;
  }
  Graph graph() const {
    return read_graph_file(input, format == "edges" ? GraphFormat::edges : GraphFormat::graph6);
  }
};

int cmd_check(const Common& c, std::ostream& out) {
  Graph g = c.graph();
  auto r = in_class(g);
  if (r.free) {
    out << "in class: (P2+P3, co-(P2+P3))-free, n=" << g.order() << '\n';
    return 0;
  }
  out << "not in class: " << describe(*r.witness) << '\n';
  return 1;
}

int cmd_color(const Common& c, std::ostream& out) {
  Graph g = c.graph();
  EngineOptions opt;
  opt.limits = c.limits();
  ColoringDerivation d;
  try {
    d = color(g, opt);
  } catch (const NotInClassError& e) {
    out << "not in class: " << describe(e.witness()) << '\n';
    return 1;
  }
  out << d.render_trace();
  const int omega = g.order() ? clique_number(g) : 0;
  out << "colors=" << d.colors_used << " omega=" << omega << " bound=" << (omega ? bound(omega) : 0)
      << " exact_fallbacks=" << d.exact_fallbacks << '\n';
  const std::string text = write_coloring(d.coloring);
  if (c.output.empty()) out << text;
  else write_text(c.output, text);
  return 0;
}

int cmd_verify(const Common& c, const std::string& coloring_path, std::ostream& out) {
  Graph g = c.graph();
  std::vector<int> col = parse_coloring(read_file(coloring_path));
  if (static_cast<int>(col.size()) != g.order())
    throw UsageError("coloring has " + std::to_string(col.size()) + " vertices, graph has " +
                     std::to_string(g.order()));
  for (auto [u, v] : g.edges())
    if (col[u] == col[v]) {
      out << "improper: edge " << u << '-' << v << " has both ends colored " << col[u] << '\n';
      return 1;
    }
  const int k = count_colors(col);
  const int omega = g.order() ? clique_number(g) : 0;
  const int limit = omega ? bound(omega) : 0;
  if (k > limit) {
    out << "proper, but colors=" << k << " exceeds bound=" << limit << " at omega=" << omega << '\n';
    return 1;
  }
  out << "proper coloring, colors=" << k << " omega=" << omega << " bound=" << limit << '\n';
  return 0;
}

std::string block(const VertexSet& s) { return "{" + join_ints(s.members()) + "}"; }

int cmd_partition(const Common& c, const std::vector<int>& cycle, bool ignore_conditions, std::ostream& out) {
  Graph g = c.graph();
  std::optional<C4Partition> p;
  try {
    if (!cycle.empty()) {
      if (cycle.size() != 4) throw UsageError("--cycle needs 4 vertices");
      p = build_partition(g, std::array<int, 4>{cycle[0], cycle[1], cycle[2], cycle[3]});
    } else if (auto emb = find_induced(g, PatternName::C4)) {
      p = build_partition(g, *emb);
    } else {
      out << "no induced C4\n";
      return 1;
    }
  } catch (const ThreeNeighborError& e) {
    out << "vertex " << e.vertex() << " has three neighbors on the cycle";
    if (e.witness()) out << ": " << describe(*e.witness());
    out << '\n';
    return 1;
  }
  out << "C=" << join_ints({p->c.begin(), p->c.end()}) << '\n';
  for (int i = 0; i < 4; ++i) out << "A" << i << "=" << block(p->a[i]) << ' ';
  out << '\n';
  for (int i = 0; i < 4; ++i) out << "B" << i << "=" << block(p->b[i]) << ' ';
  out << '\n';
  out << "X0=" << block(p->x[0]) << " X1=" << block(p->x[1]) << " D=" << block(p->d) << " T=" << block(p->t) << '\n';
  CheckOptions opt;
  opt.ignore_conditions = ignore_conditions;
  int violated = 0;
  for (const auto& r : check_properties(g, *p, opt)) {
    out << render_report(r) << '\n';
    violated += r.status == PropertyStatus::violated;
  }
  return violated ? 1 : 0;
}

int cmd_extremal(const Common& c, const std::string& name, std::ostream& out) {
  auto g = named_graph(name);
  if (!g) throw UsageError("unknown graph name: " + name);
  const std::string g6 = encode_graph6(*g);
  if (c.output.empty()) out << g6 << '\n';
  else write_text(c.output, g6 + "\n");
  const int omega = clique_number(*g);
  const int alpha = stability_number(*g);
  const int chi = alpha <= 2 ? chi_alpha2(*g) : chromatic_number(*g, c.limits()).chi;
  out << "n=" << g->order() << " m=" << g->size() << " omega=" << omega << " alpha=" << alpha << " chi=" << chi
      << " bound=" << (omega ? bound(omega) : 0) << '\n';
  return 0;
}

int cmd_fuzz(const Common& c, const FuzzConfig& cfg, int count, bool parallel, std::ostream& out) {
  FuzzConfig f = cfg;
  f.limits = c.limits();
  auto r = parallel ? fuzz_bound_parallel(f, count) : fuzz_bound(f, count);
  std::string text = r.render();
  out << text;
  if (!c.output.empty()) write_text(c.output, text);
  return r.passed() ? 0 : 1;
}

int cmd_stats(const Common& c, std::ostream& out) {
  Graph g = c.graph();
  auto s = exact_stats(g, c.limits());
  out << "n=" << g.order() << " m=" << g.size() << " omega=" << s.omega << " alpha=" << s.alpha << " chi=" << s.chi
      << " theta=" << s.theta << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chibind: coloring (P2+P3, co-(P2+P3))-free graphs"};
  app.require_subcommand(1);
  Common common;

  auto* check = app.add_subcommand("check", "class membership with a forbidden-pattern witness");
  common.attach(check, true);

  auto* colorc = app.add_subcommand("color", "derivation trace and coloring");
  common.attach(colorc, true);
  colorc->add_option("--output", common.output, "coloring file");

  std::string coloring_path;
  auto* verify = app.add_subcommand("verify", "check a coloring file against a graph");
  common.attach(verify, true);
  verify->add_option("--coloring", coloring_path, "coloring file")->required();

  std::vector<int> cycle;
  bool ignore_conditions = false;
  auto* partition = app.add_subcommand("partition", "C4 partition and property report");
  common.attach(partition, true);
  partition->add_option("--cycle", cycle, "induced 4-cycle c0 c1 c2 c3 (default: first found)")->delimiter(',');
  partition->add_flag("--ignore-conditions", ignore_conditions, "evaluate conditional properties unconditionally");

  std::string name;
  auto* extremal = app.add_subcommand("extremal", "named extremal graph: graph6 and stats");
  common.attach(extremal, false);
  extremal->add_option("name", name, "schlafli, schlafli-complement, clebsch-complement, clebsch-complement-minus-<v>, "
                                     "g<k>, grotzsch; append +k<t> to join a clique")
      ->required();
  extremal->add_option("--output", common.output, "graph6 file");

  FuzzConfig fuzz;
  std::string p_text = "1/2", mode = "repair";
  std::vector<std::string> probs_text;
  int count = 100;
  bool parallel = false;
  fuzz.sampler.seed = 42;
  auto* fuzzc = app.add_subcommand("fuzz", "seeded campaign checking the bound on in-class samples");
  common.attach(fuzzc, false);
  fuzzc->add_option("--seed", fuzz.sampler.seed, "campaign seed");
  fuzzc->add_option("--n", fuzz.sampler.n, "vertex count (minimum with --n-max)")->check(CLI::Range(0, 30));
  fuzzc->add_option("--n-max", fuzz.n_max, "largest vertex count")->check(CLI::Range(0, 30));
  fuzzc->add_option("--p", p_text, "edge probability, e.g. 1/2");
  fuzzc->add_option("--p-list", probs_text, "edge probabilities drawn per sample")->delimiter(',');
  fuzzc->add_option("--count", count, "samples")->check(CLI::PositiveNumber);
  fuzzc->add_option("--mode", mode, "reject or repair")->check(CLI::IsMember({"reject", "repair"}));
  fuzzc->add_option("--max-attempts", fuzz.sampler.max_attempts, "draws per sample")->check(CLI::PositiveNumber);
  fuzzc->add_flag("--parallel", parallel, "run samples with OpenMP");
  fuzzc->add_option("--output", common.output, "report file");

  auto* stats = app.add_subcommand("stats", "exact omega, alpha, chi, theta");
  common.attach(stats, true);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }

  try {
    if (*check) return cmd_check(common, out);
    if (*colorc) return cmd_color(common, out);
    if (*verify) return cmd_verify(common, coloring_path, out);
    if (*partition) return cmd_partition(common, cycle, ignore_conditions, out);
    if (*extremal) return cmd_extremal(common, name, out);
    if (*fuzzc) {
      fuzz.sampler.edge_prob = parse_rational(p_text);
      for (const auto& t : probs_text) fuzz.probs.push_back(parse_rational(t));
      fuzz.sampler.mode = mode == "reject" ? SampleMode::reject : SampleMode::repair;
      return cmd_fuzz(common, fuzz, count, parallel, out);
    }
    if (*stats) return cmd_stats(common, out);
  } catch (const InexactError& e) {
    err << "timeout: " << e.what() << '\n';
    return 3;
  } catch (const InvariantFailure& e) {
    err << "internal invariant failed: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace chibind
