#include "flop/complex.hpp"

#include "flop/ainfty.hpp"

#include <deque>
#include <stdexcept>

namespace flop {

std::size_t FreeComplex::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return i;
  throw std::invalid_argument("unknown generator: " + name);
}

void FreeComplex::set(const std::string& from, const std::string& to, const FreePathElement& e) {
  auto key = std::make_pair(index_of(from), index_of(to));
  if (e.is_zero())
    d.erase(key);
  else
    d[key] = e;
}

FreePathElement FreeComplex::entry(std::size_t g, std::size_t h) const {
  auto it = d.find({g, h});
  return it == d.end() ? FreePathElement{} : it->second;
}

void FreeComplex::validate() const {
  for (const auto& [key, e] : d) {
    const auto& g = gens.at(key.first);
    const auto& h = gens.at(key.second);
    if (h.degree != g.degree + 1)
      throw std::invalid_argument("entry " + g.name + " -> " + h.name + " does not raise degree by one");
    for (const auto& [p, c] : e.terms())
      if (p.source() != h.vertex || p.target() != g.vertex)
        throw std::invalid_argument("entry " + g.name + " -> " + h.name + " has a term with wrong endpoints: " +
                                    (p.word.empty() ? "idempotent" : p.word));
  }
}

std::map<std::pair<std::size_t, std::size_t>, FreePathElement> d_squared(const FreeComplex& c) {
  std::map<std::pair<std::size_t, std::size_t>, FreePathElement> out;
  for (const auto& [k1, e1] : c.d)
    for (const auto& [k2, e2] : c.d) {
      if (k1.second != k2.first) continue;
      auto& slot = out[{k1.first, k2.second}];
      slot = slot + e1 * e2;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

DSquaredReport d_squared_ideal_check(const FreeComplex& c, int N) {
  if (N < 6) throw std::invalid_argument("d_squared_ideal_check needs N >= 6");
  c.validate();
  TruncatedAlgebra A(N);
  DSquaredReport rep;
  for (const auto& [key, e] : d_squared(c)) {
    bool zero = true;
    for (const auto& [p, q] : e.terms())
      if (static_cast<int>(p.length()) > N) throw std::invalid_argument("d^2 entry longer than truncation");
    Vec v = A.reduce(e);
    for (const auto& q : v)
      if (sgn(q) != 0) zero = false;
    if (!zero) {
      rep.ok = false;
      rep.failing_entries.emplace_back(c.gens[key.first].name, c.gens[key.second].name);
    }
  }
  if (rep.ok) {
    rep.message = "d^2 vanishes modulo the relation ideal";
  } else {
    rep.message = "d^2 is not in the ideal on " + std::to_string(rep.failing_entries.size()) + " entries, first " +
                  rep.failing_entries.front().first + " -> " + rep.failing_entries.front().second;
  }
  return rep;
}

namespace {

FreePathElement P(const std::string& s) { return parse_element(s); }

}  // namespace

FreeComplex table_L0() {
  FreeComplex c;
  c.label = "L0";
  c.gens = {{"1_L0", 0, Vertex::v0}, {"Y", 1, Vertex::v1},    {"W", 1, Vertex::v1},
            {"Xbar", 2, Vertex::v1}, {"Zbar", 2, Vertex::v1}, {"pt_L0", 3, Vertex::v0}};
  c.set("1_L0", "Y", P("y"));
  c.set("1_L0", "W", P("w"));
  c.set("Y", "Zbar", P("xw"));
  c.set("Y", "Xbar", P("-zw"));
  c.set("W", "Xbar", P("zy"));
  c.set("W", "Zbar", P("-xy"));
  c.set("Xbar", "pt_L0", P("x"));
  c.set("Zbar", "pt_L0", P("z"));
  c.complete_from = 0;
  c.validate();
  return c;
}

FreeComplex table_L1() {
  // No display to copy; derived from the A-infinity operations.
  AInftyTable t = AInftyTable::conifold();
  FreeComplex c;
  c.label = "L1";
  for (Gen g : kGens) {
    if (target_brane(g) != 1) continue;
    c.gens.push_back({gen_name(g), degree(g), source_brane(g) == 0 ? Vertex::v0 : Vertex::v1});
  }
  for (const auto& [key, e] : m1b_from_table(t, 1)) c.set(gen_name(key.first), gen_name(key.second), e);
  c.complete_from = 0;
  c.validate();
  return c;
}

FreeComplex table_Lc(const Q& rho) {
  if (sgn(rho) == 0) throw std::invalid_argument("holonomy ratio rho must be nonzero");
  FreeComplex c;
  c.label = "Lc";
  c.gens = {{"b00", 0, Vertex::v1}, {"a00", 1, Vertex::v0}, {"b01", 1, Vertex::v1}, {"b10", 1, Vertex::v1},
            {"a01", 2, Vertex::v0}, {"a10", 2, Vertex::v0}, {"b11", 2, Vertex::v1}, {"a11", 3, Vertex::v0}};
  FreePathElement xr = P("x") - rho * P("z");  // x - rho z
  c.set("b00", "a00", xr);
  c.set("b00", "b01", P("xy"));
  c.set("b00", "b10", P("zw"));  // printed as zy, which breaks d^2 in the ideal
  c.set("b01", "a01", -xr);
  c.set("b01", "b11", P("-zw"));
  c.set("b10", "a10", -xr);
  c.set("b10", "b11", P("xy"));
  c.set("b11", "a11", xr);
  c.set("a00", "a01", P("yx"));
  c.set("a00", "a10", P("wz"));
  c.set("a01", "a11", P("-wz"));
  c.set("a10", "a11", P("yx"));
  c.complete_from = 0;
  c.validate();
  return c;
}

FreeComplex table_Sm(int m) {
  if (m < 2 || m > 6) throw std::invalid_argument("S_m table needs 2 <= m <= 6");
  FreeComplex c;
  c.label = "S" + std::to_string(m);
  auto n = [](const std::string& s, int i) { return s + std::to_string(i); };
  for (int i = 1; i <= m - 1; ++i) c.gens.push_back({n("c", i), 3, Vertex::v0});
  for (int i = 1; i <= m - 2; ++i) c.gens.push_back({n("r", i), 2, Vertex::v1});
  for (int i = 1; i <= m; ++i) c.gens.push_back({n("p", i), 2, Vertex::v0});
  for (int i = 0; i <= m - 1; ++i) c.gens.push_back({n("q", i), 2, Vertex::v0});
  for (int i = 1; i <= m - 2; ++i) c.gens.push_back({n("u", i), 1, Vertex::v1});
  for (int i = 1; i <= m - 2; ++i) c.gens.push_back({n("v", i), 1, Vertex::v1});

  for (int i = 1; i <= m - 2; ++i) {
    c.set(n("r", i), n("c", i), P("z"));
    c.set(n("r", i), n("c", i + 1), P("-x"));
  }
  for (int i = 1; i <= m - 1; ++i) {
    c.set(n("p", i), n("c", i), P("yx"));
    c.set(n("q", i), n("c", i), P("wz"));
  }
  // the two end generators kill y f_m and w f_1
  c.set(n("p", m), n("c", m - 1), P("yz"));
  c.set(n("q", 0), n("c", 1), P("wx"));
  for (int i = 1; i <= m - 2; ++i) {
    c.set(n("u", i), n("p", i), P("z"));
    c.set(n("u", i), n("p", i + 1), P("-x"));
    c.set(n("u", i), n("r", i), P("-xy"));
    c.set(n("v", i), n("q", i + 1), P("x"));
    c.set(n("v", i), n("q", i), P("-z"));
    c.set(n("v", i), n("r", i), P("zw"));
  }
  c.complete_from = 3;
  c.validate();
  return c;
}

FreeComplex m1b_table(const std::string& name, const Q& param) {
  if (name == "L0") return table_L0();
  if (name == "L1") return table_L1();
  if (name == "Lc") return table_Lc(param);
  if (name == "S") {
    if (param.get_den() != 1) throw std::invalid_argument("S_m needs an integer m");
    return table_Sm(static_cast<int>(param.get_num().get_si()));
  }
  throw std::invalid_argument("unknown table: " + name);
}

bool equal_up_to_generator_signs(const FreeComplex& a, const FreeComplex& b) {
  if (a.gens.size() != b.gens.size()) return false;
  std::vector<std::size_t> perm(a.gens.size());
  for (std::size_t i = 0; i < a.gens.size(); ++i) {
    perm[i] = b.index_of(a.gens[i].name);
    if (b.gens[perm[i]].degree != a.gens[i].degree || b.gens[perm[i]].vertex != a.gens[i].vertex) return false;
  }
  if (a.d.size() != b.d.size()) return false;
  std::vector<int> sign(a.gens.size(), 0);
  // edges: entry a(g,h) = s_g s_h b(g,h)
  std::map<std::size_t, std::vector<std::pair<std::size_t, int>>> adj;
  for (const auto& [key, e] : a.d) {
    FreePathElement f = b.entry(perm[key.first], perm[key.second]);
    int s;
    if (e == f)
      s = 1;
    else if (e == -f)
      s = -1;
    else
      return false;
    adj[key.first].push_back({key.second, s});
    adj[key.second].push_back({key.first, s});
  }
  for (std::size_t root = 0; root < a.gens.size(); ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t g = queue.front();
      queue.pop_front();
      for (auto [h, s] : adj[g]) {
        int want = sign[g] * s;
        if (sign[h] == 0) {
          sign[h] = want;
          queue.push_back(h);
        } else if (sign[h] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace flop
