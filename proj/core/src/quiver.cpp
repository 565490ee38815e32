#include "flop/quiver.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace flop {

Vertex source(Arrow a) { return (a == Arrow::x || a == Arrow::z) ? Vertex::v0 : Vertex::v1; }
Vertex target(Arrow a) { return other(source(a)); }
Vertex other(Vertex v) { return v == Vertex::v0 ? Vertex::v1 : Vertex::v0; }
std::string vertex_name(Vertex v) { return v == Vertex::v0 ? "v0" : "v1"; }

char arrow_char(Arrow a) {
  static constexpr char names[] = {'x', 'y', 'z', 'w'};
  return names[static_cast<int>(a)];
}

std::optional<Arrow> arrow_from_char(char c) {
  switch (c) {
    case 'x': return Arrow::x;
    case 'y': return Arrow::y;
    case 'z': return Arrow::z;
    case 'w': return Arrow::w;
    default: return std::nullopt;
  }
}

Vertex Path::source() const {
  if (word.empty()) return src;
  return flop::source(*arrow_from_char(word.back()));
}

Vertex Path::target() const {
  if (word.empty()) return src;
  return flop::target(*arrow_from_char(word.front()));
}

bool composable(const std::string& word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto a = arrow_from_char(word[i]);
    if (!a) return false;
    // word[i] is applied right after word[i + 1]
    if (i + 1 < word.size() && flop::source(*a) != flop::target(*arrow_from_char(word[i + 1]))) return false;
  }
  return true;
}

Path make_path(const std::string& word) {
  if (word.empty()) throw std::invalid_argument("empty word has no vertex");
  if (!composable(word)) throw std::invalid_argument("non-composable word: " + word);
  return Path{word, Vertex::v0};
}

Path idempotent(Vertex v) { return Path{"", v}; }

Path compose(const Path& p, const Path& q) {
  if (q.target() != p.source()) throw std::invalid_argument("compose: endpoints mismatch");
  if (p.word.empty()) return q;
  if (q.word.empty()) return p;
  return Path{p.word + q.word, Vertex::v0};
}

FreePathElement FreePathElement::word(const std::string& w, const Q& c) {
  return path(make_path(w), c);
}

FreePathElement FreePathElement::path(const Path& p, const Q& c) {
  FreePathElement e;
  e.add(p, c);
  return e;
}

void FreePathElement::add(const Path& p, const Q& c) {
  if (sgn(c) == 0) return;
  Path key = p;
  if (!key.word.empty()) key.src = Vertex::v0;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool FreePathElement::homogeneous_endpoints() const {
  if (terms_.empty()) return true;
  Vertex s = terms_.begin()->first.source(), t = terms_.begin()->first.target();
  for (const auto& [p, c] : terms_)
    if (p.source() != s || p.target() != t) return false;
  return true;
}

std::optional<std::size_t> FreePathElement::uniform_length() const {
  if (terms_.empty()) return std::nullopt;
  std::size_t l = terms_.begin()->first.length();
  for (const auto& [p, c] : terms_)
    if (p.length() != l) return std::nullopt;
  return l;
}

FreePathElement FreePathElement::operator-() const { return Q(-1) * *this; }

FreePathElement operator+(FreePathElement a, const FreePathElement& b) {
  for (const auto& [p, c] : b.terms_) a.add(p, c);
  return a;
}

FreePathElement operator-(FreePathElement a, const FreePathElement& b) {
  for (const auto& [p, c] : b.terms_) a.add(p, -c);
  return a;
}

FreePathElement operator*(const Q& s, const FreePathElement& a) {
  FreePathElement r;
  if (sgn(s) == 0) return r;
  for (const auto& [p, c] : a.terms_) r.terms_.emplace(p, s * c);
  return r;
}

FreePathElement operator*(const FreePathElement& a, const FreePathElement& b) {
  FreePathElement r;
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_)
      if (q.target() == p.source()) r.add(compose(p, q), c * d);
  return r;
}

std::string FreePathElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Q a = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (a != 1) os << flop::to_string(a) << "*";
    os << (p.word.empty() ? "e" + std::to_string(idx(p.src)) : p.word);
    first = false;
  }
  return os.str();
}

FreePathElement arrow_element(Arrow a) { return FreePathElement::word(std::string(1, arrow_char(a))); }

FreePathElement parse_element(const std::string& text) {
  FreePathElement out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw std::invalid_argument("empty polynomial");
  if (text.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    Q sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw std::invalid_argument("expected + or - in polynomial: " + text);
    }
    Q coeff = 1;
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    if (i > start) {
      coeff = parse_rational(text.substr(start, i - start));
      skip();
      if (i < text.size() && text[i] == '*') ++i;
      skip();
    }
    start = i;
    while (i < text.size() && arrow_from_char(text[i])) ++i;
    std::string w = text.substr(start, i - start);
    if (w.empty()) {
      // bare idempotent e0 / e1
      if (text.compare(i, 2, "e0") == 0) {
        out.add(idempotent(Vertex::v0), sign * coeff);
        i += 2;
      } else if (text.compare(i, 2, "e1") == 0) {
        out.add(idempotent(Vertex::v1), sign * coeff);
        i += 2;
      } else {
        throw std::invalid_argument("expected a word in polynomial: " + text);
      }
    } else {
      out.add(make_path(w), sign * coeff);
    }
    first = false;
  }
  return out;
}

Potential conifold_potential() { return Potential{{{Q(1), "xyzw"}, {Q(-1), "wzyx"}}}; }

FreePathElement cyclic_derivative(const Potential& phi, Arrow a) {
  FreePathElement d;
  char ac = arrow_char(a);
  for (const auto& t : phi.terms) {
    const std::string& w = t.word;
    if (w.empty() || !composable(w + w.substr(0, 1))) throw std::invalid_argument("potential term is not a loop: " + w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != ac) continue;
      std::string rest = w.substr(i + 1) + w.substr(0, i);
      if (rest.empty()) continue;
      d.add(make_path(rest), t.coeff);
    }
  }
  return d;
}

std::vector<FreePathElement> relations() {
  Potential phi = conifold_potential();
  return {cyclic_derivative(phi, Arrow::x), cyclic_derivative(phi, Arrow::y), cyclic_derivative(phi, Arrow::z),
          cyclic_derivative(phi, Arrow::w)};
}

}  // namespace flop
