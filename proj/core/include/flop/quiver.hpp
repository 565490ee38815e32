#pragma once

#include "flop/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flop {

// The conifold quiver: x, z : v0 -> v1 and y, w : v1 -> v0.
enum class Vertex : int { v0 = 0, v1 = 1 };
enum class Arrow : int { x = 0, y = 1, z = 2, w = 3 };

inline constexpr std::array<Arrow, 4> kArrows{Arrow::x, Arrow::y, Arrow::z, Arrow::w};
inline constexpr std::array<Vertex, 2> kVertices{Vertex::v0, Vertex::v1};

Vertex source(Arrow a);
Vertex target(Arrow a);
char arrow_char(Arrow a);
std::optional<Arrow> arrow_from_char(char c);
Vertex other(Vertex v);
inline int idx(Vertex v) { return static_cast<int>(v); }
std::string vertex_name(Vertex v);

// A path is a word over "xyzw" read right to left: "xyz" applies z first.
// The empty word needs a vertex to be meaningful, so paths carry one.
struct Path {
  std::string word;
  Vertex src = Vertex::v0;  // only consulted when word is empty

  Vertex source() const;
  Vertex target() const;
  std::size_t length() const { return word.size(); }
  friend bool operator<(const Path& a, const Path& b) {
    if (a.word != b.word) return a.word < b.word;
    return a.word.empty() && idx(a.src) < idx(b.src);
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.word == b.word && (!a.word.empty() || a.src == b.src);
  }
};

bool composable(const std::string& word);
Path make_path(const std::string& word);  // throws on a non-composable or empty word
Path idempotent(Vertex v);

// q then p; throws if target(q) != source(p).
Path compose(const Path& p, const Path& q);

// Exact linear combination of paths. Zero coefficients are never stored.
class FreePathElement {
 public:
  FreePathElement() = default;
  static FreePathElement word(const std::string& w, const Q& c = 1);
  static FreePathElement path(const Path& p, const Q& c = 1);

  const std::map<Path, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Path& p, const Q& c);

  // All terms share one source and one target, if nonzero.
  bool homogeneous_endpoints() const;
  // Every term has this length.
  std::optional<std::size_t> uniform_length() const;

  FreePathElement operator-() const;
  friend FreePathElement operator+(FreePathElement a, const FreePathElement& b);
  friend FreePathElement operator-(FreePathElement a, const FreePathElement& b);
  friend FreePathElement operator*(const Q& s, const FreePathElement& a);
  // Concatenation product a*b (b applied first); non-composable pairs vanish.
  friend FreePathElement operator*(const FreePathElement& a, const FreePathElement& b);
  friend bool operator==(const FreePathElement& a, const FreePathElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<Path, Q> terms_;
};

FreePathElement arrow_element(Arrow a);

// Parse a polynomial such as "yzw - wzy" or "x - 2*z" or "-1/2 xy".
FreePathElement parse_element(const std::string& text);

struct CyclicTerm {
  Q coeff;
  std::string word;  // a loop
};

struct Potential {
  std::vector<CyclicTerm> terms;
};

// (xyzw)_cyc - (wzyx)_cyc
Potential conifold_potential();

FreePathElement cyclic_derivative(const Potential& phi, Arrow a);

// d_x, d_y, d_z, d_w of the conifold potential, in that order.
std::vector<FreePathElement> relations();

}  // namespace flop
