#include "flop/ainfty.hpp"

#include <sstream>
#include <stdexcept>

namespace flop {

int degree(Gen g) {
  switch (g) {
    case Gen::E0:
    case Gen::E1: return 0;
    case Gen::P0:
    case Gen::P1: return 3;
    case Gen::X:
    case Gen::Y:
    case Gen::Z:
    case Gen::W: return 1;
    default: return 2;
  }
}

int source_brane(Gen g) {
  switch (g) {
    case Gen::E0:
    case Gen::P0:
    case Gen::X:
    case Gen::Z:
    case Gen::Yb:
    case Gen::Wb: return 0;
    default: return 1;
  }
}

int target_brane(Gen g) {
  switch (g) {
    case Gen::E0:
    case Gen::P0: return 0;
    case Gen::E1:
    case Gen::P1: return 1;
    default: return 1 - source_brane(g);
  }
}

std::string gen_name(Gen g) {
  static const char* names[] = {"1_L0", "1_L1", "pt_L0", "pt_L1", "X", "Y", "Z", "W", "Xbar", "Ybar", "Zbar", "Wbar"};
  return names[static_cast<int>(g)];
}

std::optional<Gen> gen_from_name(const std::string& s) {
  for (Gen g : kGens)
    if (gen_name(g) == s) return g;
  return std::nullopt;
}

bool composable(const std::vector<Gen>& args) {
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (target_brane(args[i]) != source_brane(args[i + 1])) return false;
  return true;
}

AInftyTable AInftyTable::conifold() {
  AInftyTable t;
  auto put = [&](std::vector<Gen> a, int s, Gen g) { t.table_[std::move(a)] = SignedGen{s, g}; };
  put({Gen::X, Gen::Xb}, -1, Gen::P0);
  put({Gen::Z, Gen::Zb}, -1, Gen::P0);
  put({Gen::Yb, Gen::Y}, 1, Gen::P0);
  put({Gen::Wb, Gen::W}, 1, Gen::P0);
  put({Gen::Xb, Gen::X}, 1, Gen::P1);
  put({Gen::Zb, Gen::Z}, 1, Gen::P1);
  put({Gen::Y, Gen::Yb}, -1, Gen::P1);
  put({Gen::W, Gen::Wb}, -1, Gen::P1);

  put({Gen::X, Gen::Y, Gen::Z}, 1, Gen::Wb);
  put({Gen::Z, Gen::Y, Gen::X}, -1, Gen::Wb);
  put({Gen::Y, Gen::Z, Gen::W}, 1, Gen::Xb);
  put({Gen::W, Gen::Z, Gen::Y}, -1, Gen::Xb);
  put({Gen::Z, Gen::W, Gen::X}, 1, Gen::Yb);
  put({Gen::X, Gen::W, Gen::Z}, -1, Gen::Yb);
  put({Gen::W, Gen::X, Gen::Y}, 1, Gen::Zb);
  put({Gen::Y, Gen::X, Gen::W}, -1, Gen::Zb);

  for (Gen a : kGens) {
    Gen left = source_brane(a) == 0 ? Gen::E0 : Gen::E1;
    Gen right = target_brane(a) == 0 ? Gen::E0 : Gen::E1;
    put({left, a}, 1, a);
    put({a, right}, degree(a) % 2 == 0 ? 1 : -1, a);
  }
  return t;
}

std::optional<SignedGen> AInftyTable::m(const std::vector<Gen>& args) const {
  if (args.size() < 2 || args.size() > 3) return std::nullopt;
  auto it = table_.find(args);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void AInftyTable::set(const std::vector<Gen>& args, std::optional<SignedGen> value) {
  if (value)
    table_[args] = *value;
  else
    table_.erase(args);
}

namespace {

// Evaluate the Stasheff sum on one tuple; result as coefficient per generator.
std::map<Gen, long> stasheff_sum(const AInftyTable& t, const std::vector<Gen>& a) {
  std::map<Gen, long> out;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    int eps = 0;
    for (std::size_t l = 0; l < i; ++l) eps += degree(a[l]) - 1;
    for (std::size_t j = 2; j <= 3 && i + j <= n; ++j) {
      std::vector<Gen> inner(a.begin() + static_cast<long>(i), a.begin() + static_cast<long>(i + j));
      auto r = t.m(inner);
      if (!r) continue;
      std::vector<Gen> outer(a.begin(), a.begin() + static_cast<long>(i));
      outer.push_back(r->gen);
      outer.insert(outer.end(), a.begin() + static_cast<long>(i + j), a.end());
      auto s = t.m(outer);
      if (!s) continue;
      int sign = ((eps % 2 + 2) % 2 == 0 ? 1 : -1) * r->sign * s->sign;
      out[s->gen] += sign;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

bool walk(const AInftyTable& t, std::vector<Gen>& tuple, std::size_t len, StasheffReport& rep) {
  if (tuple.size() == len) {
    ++rep.tuples_checked;
    auto s = stasheff_sum(t, tuple);
    if (!s.empty()) {
      rep.ok = false;
      rep.arity = static_cast<int>(len);
      rep.violating_tuple = tuple;
      std::ostringstream os;
      os << "Stasheff identity fails on (";
      for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? ", " : "") << gen_name(tuple[i]);
      os << "): residue";
      for (const auto& [g, c] : s) os << " " << (c > 0 ? "+" : "") << c << "*" << gen_name(g);
      rep.message = os.str();
      return false;
    }
    return true;
  }
  for (Gen g : kGens) {
    if (!tuple.empty() && target_brane(tuple.back()) != source_brane(g)) continue;
    tuple.push_back(g);
    bool ok = walk(t, tuple, len, rep);
    tuple.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

StasheffReport stasheff_check(const AInftyTable& t, int max_arity) {
  if (max_arity < 1 || max_arity > 6) throw std::invalid_argument("stasheff_check: arity must lie in [1, 6]");
  StasheffReport rep;
  for (int n = 1; n <= max_arity; ++n) {
    std::vector<Gen> tuple;
    if (!walk(t, tuple, static_cast<std::size_t>(n), rep)) return rep;
  }
  rep.message = "all Stasheff identities hold";
  return rep;
}

std::optional<Term> mk_eval(const AInftyTable& t, const std::vector<Term>& args) {
  if (args.empty() || args.size() > 3) throw std::invalid_argument("mk_eval: arity must lie in [1, 3]");
  std::vector<Gen> gens;
  for (const auto& a : args) gens.push_back(a.gen);
  if (!composable(gens)) throw std::invalid_argument("mk_eval: branes are not composable");
  auto r = t.m(gens);
  if (!r) return std::nullopt;
  FreePathElement coeff = args.front().coeff;
  for (std::size_t i = 1; i < args.size(); ++i) coeff = args[i].coeff * coeff;
  coeff = Q(r->sign) * coeff;
  if (coeff.is_zero()) return std::nullopt;
  return Term{coeff, r->gen};
}

std::vector<Term> mc_element() {
  return {{arrow_element(Arrow::x), Gen::X},
          {arrow_element(Arrow::y), Gen::Y},
          {arrow_element(Arrow::z), Gen::Z},
          {arrow_element(Arrow::w), Gen::W}};
}

namespace {

void expand(const AInftyTable& t, const std::vector<Term>& b, std::vector<Term>& prefix, std::size_t k,
            const std::optional<Term>& last, std::map<Gen, FreePathElement>& out) {
  if (prefix.size() == k) {
    std::vector<Term> args = prefix;
    if (last) args.push_back(*last);
    std::vector<Gen> gens;
    for (const auto& a : args) gens.push_back(a.gen);
    if (!composable(gens)) return;
    auto r = mk_eval(t, args);
    if (r) out[r->gen] = out[r->gen] + r->coeff;
    return;
  }
  for (const auto& term : b) {
    prefix.push_back(term);
    expand(t, b, prefix, k, last, out);
    prefix.pop_back();
  }
}

}  // namespace

std::map<Gen, FreePathElement> mc_expand(const AInftyTable& t) {
  std::map<Gen, FreePathElement> out;
  auto b = mc_element();
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<Term> prefix;
    expand(t, b, prefix, k, std::nullopt, out);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<std::pair<Gen, Gen>, FreePathElement> m1b_from_table(const AInftyTable& t, int target) {
  std::map<std::pair<Gen, Gen>, FreePathElement> d;
  auto b = mc_element();
  for (Gen p : kGens) {
    if (target_brane(p) != target) continue;
    Vertex v = source_brane(p) == 0 ? Vertex::v0 : Vertex::v1;
    Term last{FreePathElement::path(idempotent(v)), p};
    std::map<Gen, FreePathElement> out;
    for (std::size_t k = 0; k <= 2; ++k) {
      std::vector<Term> prefix;
      expand(t, b, prefix, k, last, out);
    }
    for (const auto& [g, c] : out)
      if (!c.is_zero()) d[{p, g}] = c;
  }
  return d;
}

}  // namespace flop
