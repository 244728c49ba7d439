#include "chibind/c4_partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace chibind {

namespace {

int md(int i) { return ((i % 4) + 4) % 4; }

constexpr PatternName kForbidden[] = {PatternName::P2_P3, PatternName::CO_P2_P3};

// Calls f on every k-subset of pool (ascending) until f returns true.
bool for_each_subset(const std::vector<int>& pool, int k, const std::function<bool(const std::vector<int>&)>& f) {
  const int n = static_cast<int>(pool.size());
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> pick(k);
  while (true) {
    for (int i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    if (f(pick)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Evaluates one property instance. Each check calls fail(...) with the
// vertices the proof names, plus candidate witness sets in proof order.
class Checker {
 public:
  Checker(const Graph& g, const C4Partition& p, CheckOptions opt) : g_(g), p_(p), opt_(opt) {
    k23_free_ = !find_induced(g, PatternName::K23).has_value();
    k2k3_free_ = !find_induced(g, PatternName::K2_K3).has_value();
    cobanner_free_ = !find_induced(g, PatternName::CO_BANNER).has_value();
  }

  std::vector<PropertyReport> run();

 private:
  int v(int i) const { return p_.c[md(i)]; }
  const VertexSet& A(int i) const { return p_.a[md(i)]; }
  const VertexSet& B(int i) const { return p_.b[md(i)]; }
  const VertexSet& X(int j) const { return p_.x[((j % 2) + 2) % 2]; }
  bool adj(int a, int b) const { return g_.adjacent(a, b); }
  VertexSet N(int a) const { return g_.neighbors(a); }
  VertexSet non(int a) const {
    VertexSet s = g_.vertices() - g_.neighbors(a);
    s.erase(a);
    return s;
  }

  struct Instance {
    PropertyReport report;
    std::vector<PatternName> allowed;
    bool done = false;
  };

  Instance start(std::string id, int index = -1, int index2 = -1, std::optional<PatternName> condition = std::nullopt) {
    Instance in;
    in.report.property_id = std::move(id);
    in.report.index = index;
    in.report.index2 = index2;
    in.allowed.assign(std::begin(kForbidden), std::end(kForbidden));
    if (condition) in.allowed.push_back(*condition);
    return in;
  }

  bool gated(Instance& in, bool condition_holds) {
    if (condition_holds || opt_.ignore_conditions) return false;
    in.report.status = PropertyStatus::not_applicable;
    in.done = true;
    return true;
  }

  // Records a violation. Tries each proof set, then 5-subsets of the
  // involved vertices together with the cycle, then a global search.
  void fail(Instance& in, const std::vector<int>& involved, const std::vector<std::vector<int>>& proof_sets) {
    if (in.done) return;
    in.done = true;
    in.report.status = PropertyStatus::violated;
    for (const auto& s : proof_sets)
      if (set_witness(in, s)) return;
    std::vector<int> pool = involved;
    for (int c : p_.c) pool.push_back(c);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    if (for_each_subset(pool, 5, [&](const std::vector<int>& s) { return set_witness(in, s); })) return;
    for (auto pat : in.allowed)
      if (auto e = find_induced(g_, pat)) {
        in.report.witness = e->map;
        in.report.witness_pattern = pat;
        return;
      }
  }

  bool set_witness(Instance& in, const std::vector<int>& s) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    auto e = classify_set(g_, sorted, in.allowed);
    if (!e) return false;
    in.report.witness = sorted;
    in.report.witness_pattern = e->pattern;
    return true;
  }

  void r1(int i);
  void r2(int i);
  void r3(int i);
  void r4(int j);
  void r5(int j);
  void r6(int j);
  void r7();
  void r8(int j);
  void r9(int j);
  void r10(int i, int j);
  void r11(int j);
  void r12(int i);
  void r13(int i);
  void r14(int i);
  void r15(int i);

  void finish(Instance& in) { out_.push_back(std::move(in.report)); }

  const Graph& g_;
  const C4Partition& p_;
  CheckOptions opt_;
  bool k23_free_ = true, k2k3_free_ = true, cobanner_free_ = true;
  std::vector<PropertyReport> out_;
};

// Calls f(p, q) for each pair p<q of members of s.
template <class F>
void pairs(const VertexSet& s, F&& f) {
  auto m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (f(m[a], m[b])) return;
}

void Checker::r1(int i) {
  auto in = start("R1", i);
  VertexSet s = A(i) | p_.t;
  pairs(s, [&](int p, int q) {
    if (!adj(p, q)) return false;
    fail(in, {p, q}, {{p, q, v(i + 1), v(i + 2), v(i + 3)}});
    return true;
  });
  finish(in);
}

void Checker::r2(int i) {
  auto in = start("R2", i);
  auto check = [&](const VertexSet& from, const VertexSet& into, int vi, int vi2, int vi3) {
    from.for_each([&](int p) {
      if (in.done) return;
      auto bad = (into & non(p)).members();
      if (bad.size() < 2) return;
      int q = bad[0], r = bad[1];
      fail(in, {p, q, r}, {{p, vi, q, vi2, r}, {q, r, p, vi, vi3}});
    });
  };
  check(A(i) | B(i), A(i + 2) | B(i + 1), v(i), v(i + 2), v(i + 3));
  check(A(i + 1) | B(i), B(i - 1) | A(i - 1), v(i + 1), v(i - 1), v(i + 2));
  finish(in);
}

void Checker::r3(int i) {
  auto in = start("R3", i);
  // N(p) within D|B(i+2) is a clique, for p in A(i)|B(i)|T.
  (A(i) | B(i) | p_.t).for_each([&](int p) {
    if (in.done) return;
    pairs(N(p) & (p_.d | B(i + 2)), [&](int d1, int d2) {
      if (adj(d1, d2)) return false;
      fail(in, {p, d1, d2}, {{p, d1, v(i + 2), d2, v(i + 3)}});
      return true;
    });
  });
  A(i).for_each([&](int p) {
    if (in.done) return;
    // N(p) within B(i+1) is a clique.
    pairs(N(p) & B(i + 1), [&](int d1, int d2) {
      if (adj(d1, d2)) return false;
      fail(in, {p, d1, d2}, {{p, d1, v(i + 2), d2, v(i + 1)}});
      return true;
    });
    // At most one neighbour in B(i+2), and in B(i+1).
    for (int k : {i + 2, i + 1}) {
      if (in.done) return;
      auto nb = (N(p) & B(k)).members();
      if (nb.size() < 2) continue;
      int b = nb[0], b2 = nb[1];
      int side = (k == i + 2) ? v(i + 3) : v(i + 1);
      fail(in, {p, b, b2}, {{p, v(i), side, b, b2}, {p, b, v(i + 2), b2, side}});
    }
  });
  finish(in);
}

void Checker::r4(int j) {
  auto in = start("R4", j);
  VertexSet around = B(j + 1) | B(j - 1) | p_.d;
  B(j).for_each([&](int b) {
    if (in.done) return;
    (B(j + 2) & N(b)).for_each([&](int b2) {
      if (in.done) return;
      VertexSet diff = ((N(b) - N(b2)) | (N(b2) - N(b))) & around;
      int w = diff.first();
      if (w == -1) return;
      std::vector<std::vector<int>> sets;
      for (int k = 0; k < 4; ++k) sets.push_back({b, b2, w, v(k), v(k + 1)});
      fail(in, {b, b2, w}, sets);
    });
  });
  finish(in);
}

void Checker::r5(int j) {
  auto in = start("R5", j);
  pairs(X(j), [&](int p, int q) {
    if (!adj(p, q)) return false;
    fail(in, {p, q}, {{v(j), v(j + 1), v(j + 2), p, q}});
    return true;
  });
  finish(in);
}

void Checker::r6(int j) {
  auto in = start("R6", j);
  X(j).for_each([&](int x) {
    if (in.done) return;
    for (int k = 0; k < 4 && !in.done; ++k) {
      int b = (B(k) & N(x)).first();
      if (b == -1) continue;
      // b's cycle neighbour off {v(j), v(j+2)}
      int other = (md(k) == md(j) || md(k) == md(j + 2)) ? v(k + 1) : v(k);
      fail(in, {b, x}, {{v(j), v(j + 2), other, x, b}});
    }
  });
  finish(in);
}

void Checker::r7() {
  auto in = start("R7");
  auto d = p_.d.members();
  for (std::size_t a = 0; a < d.size() && !in.done; ++a)
    for (std::size_t b = a + 1; b < d.size() && !in.done; ++b) {
      if (!adj(d[a], d[b])) continue;
      for (int r : d) {
        if (r == d[a] || r == d[b] || adj(r, d[a]) || adj(r, d[b])) continue;
        fail(in, {d[a], d[b], r}, {{d[a], d[b], r, v(1), v(3)}});
        break;
      }
    }
  finish(in);
}

void Checker::r8(int j) {
  auto in = start("R8", j);
  X(j).for_each([&](int x) {
    if (in.done) return;
    int d = (p_.d - N(x)).first();
    if (d != -1) fail(in, {x, d}, {{v(j), v(j + 1), v(j + 2), x, d}});
  });
  finish(in);
}

void Checker::r9(int j) {
  const int k = 1 - j;
  auto a = start("R9a", j), b = start("R9b", j), c = start("R9c", j);
  A(j).for_each([&](int p) {
    (A(j + 2) & N(p)).for_each([&](int q) {
      VertexSet both = N(p) | N(q);
      for (int side : {j + 1, j - 1}) {
        if (a.done) break;
        auto anti = (A(side) - both).members();
        if (anti.size() >= 2)
          fail(a, {p, q, anti[0], anti[1]}, {{p, q, anti[0], v(side), anti[1]}});
      }
      if (!b.done) {
        auto com = (X(k) & N(p) & N(q)).members();
        if (com.size() >= 2) fail(b, {p, q, com[0], com[1]}, {{p, com[0], v(j + 1), com[1], q}});
      }
      if (!c.done) {
        int r = ((p_.d | X(k)) - both).first();
        if (r != -1) fail(c, {p, q, r}, {{p, q, v(j + 1), r, v(j + 3)}});
      }
    });
  });
  finish(a);
  finish(b);
  finish(c);
}

void Checker::r10(int i, int j) {
  auto in = start("R10", i, j);
  A(i).for_each([&](int p) {
    if (in.done) return;
    (A(i + 1) & N(p)).for_each([&](int q) {
      if (in.done) return;
      X(j).for_each([&](int x) {
        if (in.done) return;
        bool px = adj(p, x), qx = adj(q, x);
        if (px && qx) fail(in, {p, q, x}, {{q, x, v(i), v(i + 1), p}});
        else if (!px && !qx) fail(in, {p, q, x}, {{p, q, x, v(i + 2), v(i + 3)}});
      });
    });
  });
  finish(in);
}

void Checker::r11(int j) {
  auto in = start("R11", j);
  (A(j) | A(j + 2)).for_each([&](int a) {
    if (in.done) return;
    auto nb = (X(j) & N(a)).members();
    if (nb.size() >= 2) fail(in, {a, nb[0], nb[1]}, {{v(j), nb[0], v(j + 2), nb[1], a}});
  });
  finish(in);
}

void Checker::r12(int i) {
  auto a = start("R12a", i, -1, PatternName::K23);
  if (!gated(a, k23_free_)) {
    B(i).for_each([&](int p) {
      if (a.done) return;
      auto nb = (N(p) & (A(i - 1) | B(i + 2))).members();
      if (nb.size() >= 2) {
        fail(a, {p, nb[0], nb[1]}, {{p, v(i), v(i - 1), nb[0], nb[1]}});
        return;
      }
      nb = (N(p) & (A(i + 2) | B(i + 2))).members();
      if (nb.size() >= 2) fail(a, {p, nb[0], nb[1]}, {{p, v(i + 1), v(i + 2), nb[0], nb[1]}});
    });
  }
  finish(a);

  auto b = start("R12b", i, -1, PatternName::K2_K3);
  if (!gated(b, k2k3_free_)) {
    (A(i) | B(i)).for_each([&](int p) {
      if (b.done) return;
      auto nn = (non(p) & (B(i + 1) | B(i + 2))).members();
      if (nn.size() >= 2) fail(b, {p, nn[0], nn[1]}, {{p, v(i), nn[0], v(i + 2), nn[1]}});
    });
    (A(i + 1) | B(i)).for_each([&](int p) {
      if (b.done) return;
      auto nn = (non(p) & (B(i - 1) | B(i + 2))).members();
      if (nn.size() >= 2) fail(b, {p, nn[0], nn[1]}, {{p, v(i + 1), nn[0], v(i - 1), nn[1]}});
    });
  }
  finish(b);
}

void Checker::r13(int i) {
  auto in = start("R13", i, -1, PatternName::K2_K3);
  if (!gated(in, k2k3_free_)) {
    auto scan = [&](const VertexSet& from, const VertexSet& into) {
      from.for_each([&](int p) {
        if (in.done) return;
        VertexSet nb = N(p) & into;
        nb.erase(p);
        auto m = nb.members();
        if (m.size() >= 2) fail(in, {p, m[0], m[1]}, {{v(i + 2), v(i - 1), p, m[0], m[1]}});
      });
    };
    scan(A(i) | B(i) | p_.t, A(i + 1) | B(i));
    scan(A(i + 1) | B(i), A(i) | B(i) | p_.t);
  }
  finish(in);
}

void Checker::r14(int i) {
  auto in = start("R14", i, -1, PatternName::CO_BANNER);
  if (!gated(in, cobanner_free_)) {
    pairs(A(i) | B(i), [&](int p, int q) {
      if (!adj(p, q)) return false;
      fail(in, {p, q}, {{p, q, v(i), v(i + 3), v(i + 2)}});
      return true;
    });
    pairs(A(i + 1) | B(i), [&](int p, int q) {
      if (in.done || !adj(p, q)) return in.done;
      fail(in, {p, q}, {{p, q, v(i + 1), v(i + 2), v(i + 3)}});
      return true;
    });
  }
  finish(in);
}

void Checker::r15(int i) {
  auto in = start("R15", i, -1, PatternName::CO_BANNER);
  if (!gated(in, cobanner_free_)) {
    VertexSet side = A(i) | B(i) | A(i + 1);
    side.for_each([&](int p) {
      if (in.done) return;
      int q = (B(i + 2) - N(p)).first();
      if (q != -1)
        fail(in, {p, q}, {{q, v(i + 2), v(i + 3), v(i), p}, {q, v(i + 2), v(i + 3), v(i + 1), p}});
    });
    if (!in.done && !side.empty() && B(i + 2).size() >= 2) {
      auto bs = B(i + 2).members();
      fail(in, {side.first(), bs[0], bs[1]}, {});
    }
  }
  finish(in);
}

std::vector<PropertyReport> Checker::run() {
  for (int i = 0; i < 4; ++i) r1(i);
  for (int i = 0; i < 4; ++i) r2(i);
  for (int i = 0; i < 4; ++i) r3(i);
  for (int j = 0; j < 2; ++j) r4(j);
  for (int j = 0; j < 2; ++j) r5(j);
  for (int j = 0; j < 2; ++j) r6(j);
  r7();
  for (int j = 0; j < 2; ++j) r8(j);
  for (int j = 0; j < 2; ++j) r9(j);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) r10(i, j);
  for (int j = 0; j < 2; ++j) r11(j);
  for (int i = 0; i < 4; ++i) r12(i);
  for (int i = 0; i < 4; ++i) r13(i);
  for (int i = 0; i < 4; ++i) r14(i);
  for (int i = 0; i < 4; ++i) r15(i);
  return std::move(out_);
}

std::string describe_three(int vertex) {
  return "vertex " + std::to_string(vertex) + " has exactly three neighbours on the cycle";
}

}  // namespace

VertexSet C4Partition::cycle() const {
  VertexSet s(host_order());
  for (int v : c) s.insert(v);
  return s;
}

VertexSet C4Partition::a_all() const { return a[0] | a[1] | a[2] | a[3]; }
VertexSet C4Partition::b_all() const { return b[0] | b[1] | b[2] | b[3]; }
VertexSet C4Partition::x_all() const { return x[0] | x[1]; }

ThreeNeighborError::ThreeNeighborError(int vertex, std::optional<PatternEmbedding> witness)
    : std::runtime_error(describe_three(vertex)), vertex_(vertex), witness_(std::move(witness)) {}

C4Partition build_partition(const Graph& g, std::array<int, 4> cyc) {
  PatternEmbedding e{PatternName::C4, {cyc.begin(), cyc.end()}};
  if (!embedding_valid(g, e)) throw std::invalid_argument("not an induced 4-cycle");
  const int n = g.order();
  C4Partition p;
  p.c = cyc;
  for (auto& s : p.a) s = VertexSet(n);
  for (auto& s : p.b) s = VertexSet(n);
  for (auto& s : p.x) s = VertexSet(n);
  p.d = VertexSet(n);
  p.t = VertexSet(n);
  for (int v = 0; v < n; ++v) {
    if (std::find(cyc.begin(), cyc.end(), v) != cyc.end()) continue;
    int mask = 0;
    for (int i = 0; i < 4; ++i)
      if (g.adjacent(v, cyc[i])) mask |= 1 << i;
    switch (__builtin_popcount(mask)) {
      case 0:
        p.t.insert(v);
        break;
      case 4:
        p.d.insert(v);
        break;
      case 1:
        p.a[__builtin_ctz(mask)].insert(v);
        break;
      case 2:
        if (mask == 0b0101) p.x[0].insert(v);
        else if (mask == 0b1010) p.x[1].insert(v);
        else if (mask == 0b1001) p.b[3].insert(v);
        else p.b[__builtin_ctz(mask)].insert(v);
        break;
      default: {
        std::vector<int> first = {cyc[0], cyc[1], cyc[2], cyc[3], v};
        std::sort(first.begin(), first.end());
        auto e3 = classify_set(g, first, kForbidden);
        if (!e3) {
          std::vector<int> pool;
          for (int u = 0; u < n; ++u)
            if (u != v) pool.push_back(u);
          for_each_subset(pool, 4, [&](const std::vector<int>& s) {
            std::vector<int> five = s;
            five.push_back(v);
            std::sort(five.begin(), five.end());
            e3 = classify_set(g, five, kForbidden);
            return e3.has_value();
          });
        }
        throw ThreeNeighborError(v, e3);
      }
    }
  }
  // Disjointness and coverage, asserted on every build.
  VertexSet all = p.cycle();
  int total = 4;
  for (const VertexSet* s : {&p.a[0], &p.a[1], &p.a[2], &p.a[3], &p.b[0], &p.b[1], &p.b[2], &p.b[3],
                             &p.x[0], &p.x[1], &p.d, &p.t}) {
    total += s->size();
    all |= *s;
  }
  if (total != n || all.size() != n) throw std::logic_error("C4 partition is not a partition");
  return p;
}

C4Partition build_partition(const Graph& g, const PatternEmbedding& c4) {
  if (c4.pattern != PatternName::C4 || c4.map.size() != 4)
    throw std::invalid_argument("build_partition needs a C4 embedding");
  return build_partition(g, std::array<int, 4>{c4.map[0], c4.map[1], c4.map[2], c4.map[3]});
}

std::vector<PatternEmbedding> distinct_c4s(const Graph& g) {
  std::vector<PatternEmbedding> out;
  for (auto& e : all_induced(g, PatternName::C4)) {
    const auto& m = e.map;
    if (m[0] < m[1] && m[0] < m[2] && m[0] < m[3] && m[1] < m[3]) out.push_back(e);
  }
  return out;
}

std::string_view to_string(PropertyStatus s) {
  switch (s) {
    case PropertyStatus::holds:
      return "holds";
    case PropertyStatus::violated:
      return "violated";
    case PropertyStatus::not_applicable:
      return "not-applicable";
  }
  return "?";
}

std::string PropertyReport::label() const {
  std::string s = property_id;
  if (index >= 0) {
    bool by_j = property_id == "R4" || property_id == "R5" || property_id == "R6" ||
                property_id == "R8" || property_id.rfind("R9", 0) == 0 || property_id == "R11";
    s += "[";
    s += by_j ? "j=" : "i=";
    s += std::to_string(index);
    if (index2 >= 0) s += ",j=" + std::to_string(index2);
    s += "]";
  }
  return s;
}

std::vector<PropertyReport> check_properties(const Graph& g, const C4Partition& p, CheckOptions opt) {
  if (p.host_order() != g.order()) throw std::invalid_argument("partition was built for another graph");
  return Checker(g, p, opt).run();
}

std::string render_report(const PropertyReport& r) {
  std::ostringstream os;
  os << r.label() << ": " << to_string(r.status);
  if (!r.witness.empty()) {
    os << " witness=";
    for (std::size_t i = 0; i < r.witness.size(); ++i) os << (i ? "," : "") << r.witness[i];
    if (r.witness_pattern) os << " (" << to_string(*r.witness_pattern) << ")";
  }
  return os.str();
}

}  // namespace chibind
