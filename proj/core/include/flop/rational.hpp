#pragma once

#include <gmpxx.h>

#include <string>

namespace flop {

using Q = mpq_class;

// n / d in lowest terms. mpq_class(n, d) skips this, and GMP comparisons assume it.
inline Q frac(const mpz_class& n, const mpz_class& d) {
  Q q(n, d);
  q.canonicalize();
  return q;
}

// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Q& q);

// Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument.
Q parse_rational(const std::string& s);

// Exact complex number with rational parts.
struct CQ {
  Q re;
  Q im;

  CQ() = default;
  CQ(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  friend bool operator==(const CQ& a, const CQ& b) { return a.re == b.re && a.im == b.im; }
  friend CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend CQ operator*(const Q& s, const CQ& a) { return {s * a.re, s * a.im}; }
};

std::string to_string(const CQ& z);

// Sign of Re(u)Im(v) - Im(u)Re(v).
int cross_sign(const CQ& u, const CQ& v);

}  // namespace flop
