#include "flop/rational.hpp"

#include <stdexcept>

namespace flop {

std::string to_string(const Q& q) { return q.get_str(); }

Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  if (start == s.size()) throw std::invalid_argument("bad rational: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (slash || i == start || i + 1 == s.size()) throw std::invalid_argument("bad rational: " + s);
      slash = true;
    } else if (c < '0' || c > '9') {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  std::string body = s[0] == '+' ? s.substr(1) : s;
  Q q;
  if (q.set_str(body, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const CQ& z) { return "(" + to_string(z.re) + ", " + to_string(z.im) + ")"; }

int cross_sign(const CQ& u, const CQ& v) {
  Q c = u.re * v.im - u.im * v.re;
  return sgn(c);
}

}  // namespace flop
