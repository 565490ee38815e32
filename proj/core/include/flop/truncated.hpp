#pragma once

#include "flop/matrix.hpp"
#include "flop/quiver.hpp"

#include <map>
#include <string>
#include <vector>

namespace flop {

// Paths of length <= N modulo the span of p*r*q (r a relation, |p|+|r|+|q| <= N).
// Every relation must have endpoints and length shared by all of its terms.
// Components are indexed by (source, length); the target follows from the parity.
class TruncatedAlgebra {
 public:
  static constexpr int kMaxCutoff = 12;

  explicit TruncatedAlgebra(int N);
  TruncatedAlgebra(int N, std::vector<FreePathElement> rels);

  int cutoff() const { return n_; }
  const std::vector<FreePathElement>& relation_list() const { return rels_; }

  static Vertex component_target(Vertex s, int len) { return len % 2 == 0 ? s : other(s); }

  // Standard words (non-pivot columns) spanning the quotient in component (s, len).
  const std::vector<std::string>& basis(Vertex s, int len) const;
  std::size_t dim(Vertex s, int len) const { return basis(s, len).size(); }
  std::size_t dim(Vertex s, Vertex t, int len) const;
  std::size_t total_dim() const { return total_; }

  // Coordinates of a homogeneous element living in component (s, len).
  Vec reduce_component(const FreePathElement& e, Vertex s, int len) const;
  // Coordinates in the concatenated basis over all components. Throws on words longer than N.
  Vec reduce(const FreePathElement& e) const;
  FreePathElement lift(Vertex s, int len, const Vec& coords) const;

  // Product in global coordinates; terms longer than N vanish.
  Vec multiply(const Vec& a, const Vec& b) const;

  // Global coordinate offset of component (s, len).
  std::size_t offset(Vertex s, int len) const;

 private:
  using Row = std::map<std::size_t, Q>;
  struct Component {
    std::vector<std::string> words;
    std::map<std::string, std::size_t> index;
    std::map<std::size_t, Row> pivots;  // lead column -> row with that lead
    std::vector<std::string> basis;
    std::vector<long> basis_pos;  // column -> basis index, or -1
  };

  void build();
  void insert(Component& c, Row r) const;
  Row to_row(const Component& c, const FreePathElement& e) const;
  Row reduced(const Component& c, Row r) const;
  const Component& comp(Vertex s, int len) const;
  Component& comp(Vertex s, int len);

  int n_;
  std::vector<FreePathElement> rels_;
  std::vector<Component> comps_;  // index 2*len + idx(s)
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

// All composable words of the given length with the given source, sorted.
std::vector<std::string> words_from(Vertex s, int len);

}  // namespace flop
