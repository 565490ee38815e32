#pragma once

#include "flop/matrix.hpp"
#include "flop/quiver.hpp"

#include <string>

namespace flop {

// x, z : V0 -> V1 are d1 x d0; y, w : V1 -> V0 are d0 x d1.
struct Representation {
  int d0 = 0;
  int d1 = 0;
  Mat x, y, z, w;

  Representation() = default;
  explicit Representation(int a, int b);
  int dim(Vertex v) const { return v == Vertex::v0 ? d0 : d1; }
  int total() const { return d0 + d1; }
  const Mat& arrow(Arrow a) const;
  Mat& arrow(Arrow a);
  // Matrix of a composable word, from V_source to V_target.
  Mat path_matrix(const std::string& word) const;
  // Throws std::invalid_argument if any matrix has the wrong shape.
  void validate_shapes() const;
  friend bool operator==(const Representation& a, const Representation& b);
};

enum class RepKind { Simple, Point, PointFlopped, VPlus, VMinus, VPlusDagger, VMinusDagger };

Representation simple(Vertex v);
Representation point(const Q& mx, const Q& mz);
Representation point_flopped(const Q& my, const Q& mw);
Representation v_plus(int m);          // dims (m-1, m), m >= 1
Representation v_minus(int n);         // dims (n+1, n), n >= 0
Representation v_plus_dagger(int m);   // dims (m-1, m), y and w active
Representation v_minus_dagger(int n);  // dims (n+1, n), y and w active

// kind names: simple (a = vertex), point, point_flopped, vplus, vminus, vplus_dagger, vminus_dagger.
Representation make_catalog_rep(const std::string& kind, const Q& a = 0, const Q& b = 0);

struct RepCheck {
  bool relations_ok = false;
  bool nilpotent = false;
};

bool relations_hold(const Representation& r);
bool is_nilpotent(const Representation& r);
RepCheck check_rep(const Representation& r);

// Multiply arrow a by the nonzero scalar s.
Representation rescale(const Representation& r, Arrow a, const Q& s);

}  // namespace flop
