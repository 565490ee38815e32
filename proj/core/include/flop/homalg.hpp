#pragma once

#include "flop/reps.hpp"
#include "flop/stability.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace flop {

// f0 : R0 -> S0 and f1 : R1 -> S1.
struct ModuleMap {
  Mat f0;
  Mat f1;
};

bool is_module_map(const Representation& r, const Representation& s, const ModuleMap& f);
bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f

std::vector<ModuleMap> hom(const Representation& r, const Representation& s);

// xi[a] maps M at source(a) to N at target(a).
struct ExtensionDatum {
  std::array<Mat, 4> xi;
};

struct Ext1Result {
  int dim = 0;
  std::vector<ExtensionDatum> basis;  // representatives of a basis of classes
};

bool is_cocycle(const Representation& m, const Representation& n, const ExtensionDatum& e);
bool is_coboundary(const Representation& m, const Representation& n, const ExtensionDatum& e);
Ext1Result ext1(const Representation& m, const Representation& n);

// 0 -> N -> E -> M -> 0 with arrow blocks [[N_a, xi_a], [0, M_a]].
struct Extension {
  Representation total;
  ModuleMap inclusion;   // N -> E
  ModuleMap projection;  // E -> M
};

// Throws std::invalid_argument if xi is not a cocycle.
Extension build_extension(const Representation& m, const Representation& n, const ExtensionDatum& xi);
// Injective inclusion, surjective projection, exact in the middle.
bool verify_ses(const Representation& n, const Extension& e, const Representation& m);

bool iso_check(const Representation& r, const Representation& s, std::uint64_t seed = 0);

struct SphereImage {
  Representation rep;
  std::vector<std::string> steps;  // one line per cone
};

// Vertex simples for k = 0, 1; iterated extensions by point(1:-1) otherwise.
// Throws std::runtime_error if a step fails its checks.
SphereImage psi_sphere(int k, std::uint64_t seed = 0);
Representation catalog_sphere(int k);  // V+(k) for k >= 1, V-(-k) for k <= 0

struct ExtDims {
  std::array<int, 4> dims{};
  int total() const { return dims[0] + dims[1] + dims[2] + dims[3]; }
  int euler() const { return dims[0] - dims[1] + dims[2] - dims[3]; }
};

// Ext^i(S_v, M) for i = 0..3 from a minimal projective resolution over the algebra
// truncated at N, cross-checked against N + 1. Throws std::runtime_error if they differ.
ExtDims ext_dims(Vertex v, const Representation& m, int N = 6);
// Single truncation, no cross-check.
ExtDims ext_dims_at(Vertex v, const Representation& m, int N);

// K-class map in the simple basis: (d0, d1) -> (-d0 + 2 d1, d1).
DimVec flop_K(const DimVec& d);

struct FlopPointReport {
  Representation sub;       // simple(v1)
  Representation quotient;  // simple(v0)
  Extension triangle;
  DimVec k_class;
  StabilityVerdict verdict;
  bool witness_phase_exceeds = false;
};

// Point module of x,z type in the chamber zeta0 < zeta1. Throws otherwise.
FlopPointReport flop_point_analysis(const Representation& pt, const StabilityParams& p);

}  // namespace flop
