#pragma once

#include "flop/quiver.hpp"
#include "flop/truncated.hpp"

#include <climits>
#include <map>
#include <string>
#include <vector>

namespace flop {

struct ComplexGen {
  std::string name;
  int degree = 0;
  Vertex vertex = Vertex::v0;
};

// Free module complex over the path algebra. d(g) = sum_h d[g,h] * h, so an element
// p*g maps to sum_h (p * d[g,h]) * h; each entry runs from vertex(h) to vertex(g).
struct FreeComplex {
  std::string label;
  std::vector<ComplexGen> gens;
  std::map<std::pair<std::size_t, std::size_t>, FreePathElement> d;
  // Cohomology below this degree is not modelled by the shipped generators.
  int complete_from = INT_MIN;

  std::size_t index_of(const std::string& name) const;
  void set(const std::string& from, const std::string& to, const FreePathElement& e);
  // Throws std::invalid_argument describing the first malformed entry.
  void validate() const;
  FreePathElement entry(std::size_t g, std::size_t h) const;
};

// Composite d*d as a map (g, k) -> element, expanded in the free path algebra.
std::map<std::pair<std::size_t, std::size_t>, FreePathElement> d_squared(const FreeComplex& c);

struct DSquaredReport {
  bool ok = true;
  std::string message;
  std::vector<std::pair<std::string, std::string>> failing_entries;
};

DSquaredReport d_squared_ideal_check(const FreeComplex& c, int N);

// Catalog of m1b tables with Novikov weights set to 1.
FreeComplex table_L0();
FreeComplex table_L1();
FreeComplex table_Lc(const Q& rho);
FreeComplex table_Sm(int m);
// name: "L0", "L1", "Lc" (param rho), "S" (param m).
FreeComplex m1b_table(const std::string& name, const Q& param = 1);

// Rescale generators by signs so that a matches b entrywise; true if possible.
bool equal_up_to_generator_signs(const FreeComplex& a, const FreeComplex& b);

}  // namespace flop
