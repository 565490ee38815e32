#include "flop/verify.hpp"

#include "flop/ainfty.hpp"
#include "flop/arcs.hpp"
#include "flop/cohomology.hpp"
#include "flop/complex.hpp"
#include "flop/fpscan.hpp"
#include "flop/homalg.hpp"
#include "flop/truncated.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace flop {

namespace {

using Clock = std::chrono::steady_clock;

// Every check appends to a detail stream and returns whether it held.
struct Ctx {
  VerifyOptions opt;
  std::ostringstream out;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) out << "; ";
      out << "failed: " << what;
      ok = false;
    }
  }
};

const StabilityParams kChamber1{CQ(-1, 2), CQ(1, 1)};  // zeta0 > zeta1
const StabilityParams kChamber2{CQ(1, 1), CQ(-1, 2)};

std::string dv(const DimVec& d) { return "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")"; }

void c1_mc(Ctx& c) {
  auto mc = mc_expand(AInftyTable::conifold());
  const std::vector<std::pair<Gen, std::string>> expected{
      {Gen::Wb, "zyx - xyz"}, {Gen::Xb, "wzy - yzw"}, {Gen::Yb, "xwz - zwx"}, {Gen::Zb, "yxw - wxy"}};
  const Arrow arrows[4] = {Arrow::w, Arrow::x, Arrow::y, Arrow::z};
  c.expect(mc.size() == 4, "mc has " + std::to_string(mc.size()) + " nonzero components");
  Potential phi = conifold_potential();
  for (std::size_t i = 0; i < expected.size(); ++i) {
    auto [g, text] = expected[i];
    auto it = mc.find(g);
    bool present = it != mc.end();
    c.expect(present && it->second == parse_element(text), "component on " + gen_name(g));
    c.expect(present && it->second == -cyclic_derivative(phi, arrows[i]), gen_name(g) + " is minus the cyclic derivative");
  }
  if (c.ok) c.out << "four components equal -dPhi";
}

void c2_stasheff(Ctx& c) {
  auto rep = stasheff_check(AInftyTable::conifold(), 6);
  c.expect(rep.ok, rep.message);
  c.out << rep.tuples_checked << " tuples up to arity 6";
}

void c3_cohomology(Ctx& c) {
  struct Case {
    FreeComplex table;
    Representation expected;
    std::string name;
  };
  const Q rho(2);
  std::vector<Case> cases{{table_L0(), simple(Vertex::v0), "L0 -> S(v0)"},
                          {table_Lc(rho), point(rho, 1), "Lc(rho=2) -> point(2:1)"},
                          {table_Sm(2), v_plus(2), "S2 -> V+(2)"},
                          {table_Sm(3), v_plus(3), "S3 -> V+(3)"}};
  for (const auto& k : cases) {
    for (int N : {6, 7}) {
      auto h = free_complex_cohomology(k.table, N, c.opt.seed);
      bool single = h.size() == 1 && h.count(0);
      c.expect(single, k.name + " concentrated in degree 0 at N=" + std::to_string(N));
      c.expect(single && iso_check(h.at(0), k.expected, c.opt.seed), k.name + " at N=" + std::to_string(N));
    }
  }
  if (c.ok) c.out << "L0, Lc(2), S2, S3 at N=6,7";
}

void c4_dsquared(Ctx& c) {
  std::vector<FreeComplex> tables{table_L0(), table_L1(), table_Lc(2)};
  for (int m = 2; m <= 6; ++m) tables.push_back(table_Sm(m));
  for (const auto& t : tables) {
    auto r = d_squared_ideal_check(t, 8);
    c.expect(r.ok, t.label + ": " + r.message);
  }
  if (c.ok) c.out << tables.size() << " tables at N=8";
}

std::vector<std::pair<std::string, Representation>> chamber_reps() {
  std::vector<std::pair<std::string, Representation>> out;
  for (int m = 1; m <= 3; ++m) out.push_back({"V+(" + std::to_string(m) + ")", v_plus(m)});
  for (int n = 0; n <= 2; ++n) out.push_back({"V-(" + std::to_string(n) + ")", v_minus(n)});
  const std::pair<int, int> pts[] = {{1, 1}, {1, 0}, {0, 1}, {1, 2}};
  for (auto [a, b] : pts)
    out.push_back({"point(" + std::to_string(a) + ":" + std::to_string(b) + ")", point(a, b)});
  return out;
}

bool is_simple_rep(const Representation& r) { return r.total() == 1; }

// A witness must be a subrepresentation whose phase beats the whole.
bool witness_valid(const Representation& r, const StabilityVerdict& v, const StabilityParams& p) {
  if (!v.witness || !is_subrep(r, *v.witness)) return false;
  return phase_lt(central_charge(r, p), central_charge(v.witness->dims(), p));
}

void c5_stability(Ctx& c) {
  int stable = 0, unstable = 0;
  for (const auto& [name, r] : chamber_reps()) {
    auto v1 = is_stable(r, kChamber1);
    c.expect(v1.kind == VerdictKind::Stable, name + " in zeta0>zeta1: " + v1.describe());
    stable += v1.kind == VerdictKind::Stable;
    if (is_simple_rep(r)) continue;
    auto v2 = is_stable(r, kChamber2);
    c.expect(v2.kind == VerdictKind::Unstable && witness_valid(r, v2, kChamber2),
             name + " in zeta0<zeta1: " + v2.describe());
    unstable += v2.kind == VerdictKind::Unstable;
  }
  c.out << stable << " stable, " << unstable << " destabilized after the flop";
}

const std::map<DimVec, long> kExpectedScan{{{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 3},  {{1, 2}, 6},
                                           {{2, 1}, 6}, {{2, 3}, 1008}, {{3, 2}, 1008}};

std::set<DimVec> keys(const std::map<DimVec, long>& m) {
  std::set<DimVec> s;
  for (const auto& kv : m) s.insert(kv.first);
  return s;
}

void c6_scan(Ctx& c) {
  if (c.opt.skip_scan) {
    c.out << "skipped";
    c.ok = false;
    return;
  }
  const std::set<DimVec> want = keys(kExpectedScan);
  for (const auto* p : {&kChamber1, &kChamber2}) {
    auto got = stable_dimvector_scan(*p, 5);
    std::string where = p == &kChamber1 ? "zeta0>zeta1" : "zeta0<zeta1";
    c.expect(keys(got) == want, "support in " + where);
    c.expect(got == kExpectedScan, "point counts over F2 in " + where);
  }
  if (c.ok) c.out << "both chambers: (0,1) (1,0) (1,1) (1,2) (2,1) (2,3) (3,2)";
}

void c7_ext(Ctx& c) {
  auto a = ext_dims(Vertex::v0, simple(Vertex::v0));
  auto b = ext_dims(Vertex::v0, simple(Vertex::v1));
  c.expect(a.total() == 2 && a.euler() == 0, "Ext(S0,S0) total " + std::to_string(a.total()));
  c.expect(b.total() == 4 && b.euler() == 0, "Ext(S0,S1) total " + std::to_string(b.total()));
  c.out << "Ext(S0,S0) = " << a.dims[0] << a.dims[1] << a.dims[2] << a.dims[3] << ", Ext(S0,S1) = " << b.dims[0]
        << b.dims[1] << b.dims[2] << b.dims[3];
}

void c8_psi(Ctx& c) {
  int steps = 0;
  for (int k = -3; k <= 4; ++k) {
    // psi_sphere checks every short exact sequence it builds and throws on failure
    auto s = psi_sphere(k, c.opt.seed);
    steps += static_cast<int>(s.steps.size());
    c.expect(iso_check(s.rep, catalog_sphere(k), c.opt.seed), "psi(S_" + std::to_string(k) + ")");
  }
  if (c.ok) c.out << "k = -3..4, " << steps << " cone steps verified";
}

void c9_flop(Ctx& c) {
  // involution on a box
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) c.expect(flop_K(flop_K({a, b})) == DimVec(a, b), "involution at " + dv({a, b}));
  c.expect(flop_K({1, 1}) == DimVec(1, 1), "flop_K fixes (1,1)");
  // classes are compared up to sign (a shift) and only when both ends fit in the scan bound
  const std::set<DimVec> stable = keys(kExpectedScan);
  auto norm = [](DimVec d) { return d.first < 0 || (d.first == 0 && d.second < 0) ? DimVec(-d.first, -d.second) : d; };
  auto in_bound = [](DimVec d) { return d.first + d.second <= 5; };
  int matched = 0;
  for (const auto& d : stable) {
    DimVec e = norm(flop_K(d));
    if (!in_bound(e)) continue;
    c.expect(stable.count(e) > 0, "flop_K" + dv(d) + " = " + dv(e) + " is stable after the flop");
    ++matched;
  }
  auto rep = flop_point_analysis(point(1, 1), kChamber2);
  c.expect(rep.verdict.kind == VerdictKind::Unstable, "point(1:1) after the flop: " + rep.verdict.describe());
  c.expect(rep.verdict.witness && rep.verdict.witness->dims() == DimVec(0, 1) && rep.witness_phase_exceeds,
           "witness is S(v1) with larger phase");
  if (c.ok) c.out << matched << " stable classes mapped within bound; point(1:1) destabilized by S(v1)";
}

void c10_arcs(Ctx& c) {
  SceneConfig cfg;
  for (int k = -2; k <= 3; ++k) {
    PLArc s = catalog_arc("S", k, cfg);
    PLArc f = flop_map(s, cfg);
    PLArc ff = flop_map(f, cfg);
    PLArc ti = dehn_twist_map(s, cfg, true);
    std::string ks = std::to_string(k);
    c.expect(invariants(ff, cfg) == invariants(ti, cfg), "flop^2(S_" + ks + ") vs inverse twist");
    c.expect(crossing_word(ff, cfg) == crossing_word(ti, cfg), "crossing words of flop^2(S_" + ks + ")");
    c.expect(invariants(f, cfg) == invariants(catalog_arc("S'", -k, cfg), cfg), "flop(S_" + ks + ") vs S'_" + std::to_string(-k));
  }
  for (int m = 1; m <= 3; ++m)
    c.expect(invariants(catalog_arc("S", m, cfg), cfg).seg == m - 1, "seg crossings of S_" + std::to_string(m));
  if (c.ok) c.out << "k = -2..3 and seg(S_m) = m-1";
}

void c11_properties(Ctx& c) {
  // Schur: stable modules have scalar endomorphisms only
  int schur = 0;
  for (const auto& [name, r] : chamber_reps()) {
    if (is_stable(r, kChamber1).kind != VerdictKind::Stable) continue;
    c.expect(hom(r, r).size() == 1, "End(" + name + ") is one dimensional");
    ++schur;
  }
  // rescaling an arrow by a nonzero scalar does not change the verdict
  std::mt19937_64 rng(c.opt.seed);
  std::uniform_int_distribution<int> coef(1, 9);
  int rescaled = 0;
  for (const auto& [name, r] : chamber_reps())
    for (const auto* p : {&kChamber1, &kChamber2})
      for (Arrow a : {Arrow::x, Arrow::z}) {
        Q s = frac(coef(rng) * (rng() % 2 ? 1 : -1), coef(rng));
        auto v = is_stable(r, *p).kind;
        c.expect(is_stable(rescale(r, a, s), *p).kind == v, name + " rescaled by " + to_string(s));
        ++rescaled;
      }
  // strict weak order laws for the phase comparator
  std::uniform_int_distribution<int> part(-20, 20);
  std::vector<CQ> zs;
  while (zs.size() < 1000) {
    CQ z(frac(part(rng), 1 + rng() % 7), frac(part(rng), 1 + rng() % 7));
    if (admissible(z)) zs.push_back(z);
  }
  auto equiv = [](const CQ& u, const CQ& v) { return !phase_lt(u, v) && !phase_lt(v, u); };
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const CQ &u = zs[i], &v = zs[(i + 1) % zs.size()], &w = zs[(i * 7 + 3) % zs.size()];
    c.expect(!phase_lt(u, u), "irreflexive");
    c.expect(!(phase_lt(u, v) && phase_lt(v, u)), "asymmetric");
    if (phase_lt(u, v) && phase_lt(v, w)) c.expect(phase_lt(u, w), "transitive");
    if (equiv(u, v) && equiv(v, w)) c.expect(equiv(u, w), "incomparability transitive");
    if (!c.ok) break;
  }
  TruncatedAlgebra A(6);
  c.expect(A.dim(Vertex::v0, Vertex::v0, 4) == 9, "dim e0 A e0 in length 4 is " + std::to_string(A.dim(Vertex::v0, Vertex::v0, 4)));
  if (c.ok)
    c.out << schur << " Schur checks, " << rescaled << " rescalings, " << zs.size() << " phase samples, Hilbert value 9";
}

struct Spec {
  const char* name;
  double budget;
  void (*run)(Ctx&);
};

const Spec kSpecs[kCriteria] = {
    {"maurer-cartan", 1, c1_mc},        {"stasheff", 10, c2_stasheff},  {"m1b-cohomology", 30, c3_cohomology},
    {"d-squared", 10, c4_dsquared},     {"stability", 60, c5_stability}, {"chamber-scan", 900, c6_scan},
    {"ext-totals", 60, c7_ext},         {"cone-pipeline", 60, c8_psi},  {"flop-k-theory", 1, c9_flop},
    {"arc-flop", 10, c10_arcs},         {"properties", 60, c11_properties},
};

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& opt) {
  if (id < 1 || id > kCriteria) throw std::invalid_argument("criterion id must be 1.." + std::to_string(kCriteria));
  const Spec& s = kSpecs[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = s.name;
  r.budget = s.budget;
  Ctx c;
  c.opt = opt;
  auto t0 = Clock::now();
  try {
    s.run(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.ok = c.ok;
  r.detail = c.out.str();
  return r;
}

std::vector<CriterionResult> run_all(const VerifyOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, opt));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d %-15s (%.2f s / %g s)", r.pass() ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.budget);
  std::string line = head;
  if (r.ok && !r.pass()) line += "  over time budget;";
  if (!r.detail.empty()) line += "  " + r.detail;
  return line;
}

}  // namespace flop
