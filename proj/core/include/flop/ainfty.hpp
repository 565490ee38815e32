#pragma once

#include "flop/quiver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flop {

// Basis of CF(L, L) for L = L0 + L1.
enum class Gen : int { E0, E1, P0, P1, X, Y, Z, W, Xb, Yb, Zb, Wb };

inline constexpr std::array<Gen, 12> kGens{Gen::E0, Gen::E1, Gen::P0, Gen::P1, Gen::X,  Gen::Y,
                                           Gen::Z,  Gen::W,  Gen::Xb, Gen::Yb, Gen::Zb, Gen::Wb};

int degree(Gen g);
int source_brane(Gen g);  // g in hom(L_source, L_target)
int target_brane(Gen g);
std::string gen_name(Gen g);
std::optional<Gen> gen_from_name(const std::string& s);

struct SignedGen {
  int sign;
  Gen gen;
};

// m1 = 0 and m_k = 0 for k >= 4; m2 and m3 are finite tables.
class AInftyTable {
 public:
  // The conifold table together with strict unit rules
  // m2(1, a) = a and m2(a, 1) = (-1)^|a| a.
  static AInftyTable conifold();

  std::optional<SignedGen> m(const std::vector<Gen>& args) const;
  void set(const std::vector<Gen>& args, std::optional<SignedGen> value);

  const std::map<std::vector<Gen>, SignedGen>& entries() const { return table_; }

 private:
  std::map<std::vector<Gen>, SignedGen> table_;
};

bool composable(const std::vector<Gen>& args);

struct StasheffReport {
  bool ok = true;
  std::size_t tuples_checked = 0;
  int arity = 0;
  std::vector<Gen> violating_tuple;
  std::string message;
};

// Checks sum (-1)^{e_i} m(a_1..a_i, m(a_{i+1}..a_{i+j}), ...) = 0 with
// e_i = sum_{l <= i} (|a_l| - 1) on every composable tuple of length 1..max_arity.
StasheffReport stasheff_check(const AInftyTable& t, int max_arity);

struct Term {
  FreePathElement coeff;
  Gen gen;
};

// m_k(x1 X1, ..., xk Xk) = xk...x1 m_k(X1, ..., Xk). Coefficients live in degree 0,
// so no Koszul sign appears. Throws on non-composable branes.
std::optional<Term> mk_eval(const AInftyTable& t, const std::vector<Term>& args);

// b = xX + yY + zZ + wW.
std::vector<Term> mc_element();

// Components of sum_k m_k(b, ..., b) on every generator (zero ones omitted).
std::map<Gen, FreePathElement> mc_expand(const AInftyTable& t);

// d(p) = sum_k m_k(b, ..., b, p) on generators of CF(L, L_j); generator vertex is the
// source brane. Returned as (row generator, column generator) -> coefficient.
std::map<std::pair<Gen, Gen>, FreePathElement> m1b_from_table(const AInftyTable& t, int target_brane);

}  // namespace flop
