#pragma once

#include "flop/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace flop {

struct Pt {
  Q x;
  Q y;
  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
};

// Branch points a < b < 0 on the real axis; the flop acts in the disk |z - c0| < R2.
struct SceneConfig {
  Q a{-3};
  Q b{-2};
  Q R1{1};
  Q R2{2};
  Q eps{1, 10};
  Q c0() const { return (a + b) / 2; }
  // Throws std::invalid_argument unless a < b < 0, (b-a)/2 < R1 < R2 < |a+b|/2, eps > 0.
  void validate() const;
};

// Piecewise linear arc from one branch point to the other.
struct PLArc {
  std::vector<Pt> pts;
  // +1 when the arc starts at a, -1 when it starts at b.
  int orientation(const SceneConfig& cfg) const;
};

// Raised when an interior vertex sits on the real axis or a crossing hits a marked point.
class DegenerateArc : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Signed crossings with the positive real axis (upward = +1), unsigned crossings with the
// open segment (a, b), and the start point.
struct ArcInvariants {
  int ray = 0;
  int seg = 0;
  bool starts_at_a = true;
  friend bool operator==(const ArcInvariants&, const ArcInvariants&) = default;
  std::string to_string() const;
};

// Throws std::invalid_argument (or DegenerateArc) describing the first problem.
void validate_arc(const PLArc& arc, const SceneConfig& cfg);
ArcInvariants invariants(const PLArc& arc, const SceneConfig& cfg);

// Crossings with the intervals L = (-inf, a), M = (a, b), G = (b, 0), P = (0, inf), written as
// letter plus direction, with bigons cancelled and letters next to the endpoints unwound.
// Together with the start point it determines the isotopy class of the arc in the plane
// punctured at a, b and 0, so it is finer than ArcInvariants.
std::string crossing_word(const PLArc& arc, const SceneConfig& cfg);

PLArc reversed(const PLArc& arc);
PLArc conjugate(const PLArc& arc);
// Splits every segment into `parts` pieces; nudges the split if it would land on the axis.
PLArc refine(const PLArc& arc, int parts);

// S_k: from a to b winding k times about the origin, a straight segment in log coordinates.
// S'_k: from b to a winding -k times. Digitized on a 2^-20 grid. "S" accepts |k| <= 6 and
// "S'" accepts |k| <= 3.
PLArc catalog_arc(const std::string& label, int k, const SceneConfig& cfg = {});

// Half rotation about c0: pi inside R1, identity outside R2, interpolated on rings between.
PLArc flop_map(const PLArc& arc, const SceneConfig& cfg = {});
// Full turn on the same rings; the inner disk is fixed. inverse = true turns the other way,
// which agrees with flop_map applied twice.
PLArc dehn_twist_map(const PLArc& arc, const SceneConfig& cfg = {}, bool inverse = false);

enum class PhaseOrder { Greater, Less, Unspecified };
std::string phase_order_name(PhaseOrder p);
// Comparison of theta(S_i) with theta(S_j). Throws if i == j.
PhaseOrder phase_order(int i, int j);

}  // namespace flop
