#include "flop/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace flop {

void SceneConfig::validate() const {
  if (!(a < b && b < 0)) throw std::invalid_argument("scene needs a < b < 0");
  if (!((b - a) / 2 < R1 && R1 < R2)) throw std::invalid_argument("scene needs (b-a)/2 < R1 < R2");
  if (!(R2 < abs(a + b) / 2)) throw std::invalid_argument("scene needs R2 < |a+b|/2 so the origin stays outside");
  if (sgn(eps) <= 0) throw std::invalid_argument("scene clearance must be positive");
}

int PLArc::orientation(const SceneConfig& cfg) const {
  if (pts.empty()) throw std::invalid_argument("empty arc");
  return pts.front() == Pt{cfg.a, 0} ? 1 : -1;
}

std::string ArcInvariants::to_string() const {
  std::ostringstream os;
  os << "(ray " << ray << ", seg " << seg << ", start " << (starts_at_a ? "a" : "b") << ')';
  return os.str();
}

namespace {

Q cross(const Pt& o, const Pt& p, const Pt& q) { return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x); }

bool on_segment(const Pt& p, const Pt& q, const Pt& r) {
  if (sgn(cross(p, q, r)) != 0) return false;
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

bool boxes_meet(const Pt& p1, const Pt& p2, const Pt& q1, const Pt& q2) {
  return std::max(std::min(p1.x, p2.x), std::min(q1.x, q2.x)) <= std::min(std::max(p1.x, p2.x), std::max(q1.x, q2.x)) &&
         std::max(std::min(p1.y, p2.y), std::min(q1.y, q2.y)) <= std::min(std::max(p1.y, p2.y), std::max(q1.y, q2.y));
}

bool segments_meet(const Pt& p1, const Pt& p2, const Pt& q1, const Pt& q2) {
  if (!boxes_meet(p1, p2, q1, q2)) return false;
  int d1 = sgn(cross(q1, q2, p1)), d2 = sgn(cross(q1, q2, p2));
  int d3 = sgn(cross(p1, p2, q1)), d4 = sgn(cross(p1, p2, q2));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(q1, q2, p1)) || (d2 == 0 && on_segment(q1, q2, p2)) ||
         (d3 == 0 && on_segment(p1, p2, q1)) || (d4 == 0 && on_segment(p1, p2, q2));
}

Q dist2(const Pt& p, const Pt& q) { return (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y); }

// Squared distance from c to the segment [p, q].
Q seg_dist2(const Pt& p, const Pt& q, const Pt& c) {
  Q dx = q.x - p.x, dy = q.y - p.y;
  Q len2 = dx * dx + dy * dy;
  Q t = ((c.x - p.x) * dx + (c.y - p.y) * dy) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return dist2({p.x + t * dx, p.y + t * dy}, c);
}

std::string pt_str(const Pt& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

}  // namespace

void validate_arc(const PLArc& arc, const SceneConfig& cfg) {
  const auto& v = arc.pts;
  const Pt A{cfg.a, 0}, B{cfg.b, 0}, O{0, 0};
  if (v.size() < 2) throw std::invalid_argument("arc needs at least two points");
  bool ends_ok = (v.front() == A && v.back() == B) || (v.front() == B && v.back() == A);
  if (!ends_ok) throw std::invalid_argument("arc must join the branch points a and b");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (dist2(v[i], O) < cfg.eps * cfg.eps) throw std::invalid_argument("vertex " + pt_str(v[i]) + " is within eps of the origin");
    if (i + 1 < v.size() && v[i] == v[i + 1]) throw std::invalid_argument("repeated vertex " + pt_str(v[i]));
  }
  const std::size_t n = v.size() - 1;  // segments
  for (std::size_t i = 0; i < n; ++i) {
    if (on_segment(v[i], v[i + 1], O)) throw std::invalid_argument("segment passes through the origin");
    for (const Pt& m : {A, B}) {
      if (!on_segment(v[i], v[i + 1], m)) continue;
      bool allowed = (i == 0 && v[0] == m) || (i + 1 == n && v[n] == m);
      if (!allowed) throw std::invalid_argument("arc passes through a branch point at " + pt_str(m));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1) {
        // shared vertex only: reject folding back along the same line
        const Pt &p = v[i], &q = v[i + 1], &r = v[i + 2];
        if (sgn(cross(q, p, r)) == 0 && sgn((p.x - q.x) * (r.x - q.x) + (p.y - q.y) * (r.y - q.y)) > 0)
          throw std::invalid_argument("arc folds back at " + pt_str(q));
        continue;
      }
      if (segments_meet(v[i], v[i + 1], v[j], v[j + 1]))
        throw std::invalid_argument("arc is not simple: segments " + std::to_string(i) + " and " + std::to_string(j) + " meet");
    }
}

namespace {

struct Crossing {
  char interval;  // L, M, G or P
  int dir;        // +1 upward
};

std::vector<Crossing> crossings(const PLArc& arc, const SceneConfig& cfg) {
  validate_arc(arc, cfg);
  const auto& v = arc.pts;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (sgn(v[i].y) == 0)
      throw DegenerateArc("interior vertex " + pt_str(v[i]) + " lies on the real axis; perturb it off the axis");
  std::vector<Crossing> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Pt &p = v[i], &q = v[i + 1];
    int sp = sgn(p.y), sq = sgn(q.y);
    if (sp * sq >= 0) continue;  // no strict crossing; endpoints never count
    Q x = p.x - p.y * (q.x - p.x) / (q.y - p.y);
    if (x == cfg.a || x == cfg.b || sgn(x) == 0)
      throw DegenerateArc("crossing hits a marked point at x = " + to_string(x));
    char interval = x > 0 ? 'P' : x < cfg.a ? 'L' : x < cfg.b ? 'M' : 'G';
    out.push_back({interval, sq > 0 ? 1 : -1});
  }
  return out;
}

}  // namespace

ArcInvariants invariants(const PLArc& arc, const SceneConfig& cfg) {
  ArcInvariants inv;
  inv.starts_at_a = arc.pts.front() == Pt{cfg.a, 0};
  for (const auto& c : crossings(arc, cfg)) {
    if (c.interval == 'P') inv.ray += c.dir;
    if (c.interval == 'M') inv.seg += 1;
  }
  return inv;
}

std::string crossing_word(const PLArc& arc, const SceneConfig& cfg) {
  std::vector<Crossing> letters;
  for (const auto& c : crossings(arc, cfg)) {
    // Two crossings of one interval in a row bound a bigon inside a half plane.
    if (!letters.empty() && letters.back().interval == c.interval)
      letters.pop_back();
    else
      letters.push_back(c);
  }
  // Crossings of an interval touching an endpoint unwind by turning the arc about that endpoint.
  const bool start_a = arc.pts.front() == Pt{cfg.a, 0};
  auto touches = [](char interval, bool at_a) { return interval == 'M' || interval == (at_a ? 'L' : 'G'); };
  std::size_t lo = 0, hi = letters.size();
  while (lo < hi && touches(letters[lo].interval, start_a)) ++lo;
  while (hi > lo && touches(letters[hi - 1].interval, !start_a)) --hi;
  std::string word;
  for (std::size_t i = lo; i < hi; ++i) {
    word += letters[i].interval;
    word += letters[i].dir > 0 ? '+' : '-';
  }
  return word;
}

PLArc reversed(const PLArc& arc) { return {std::vector<Pt>(arc.pts.rbegin(), arc.pts.rend())}; }

PLArc conjugate(const PLArc& arc) {
  PLArc out = arc;
  for (auto& p : out.pts) p.y = -p.y;
  return out;
}

namespace {

// Interior subdivision points of [p, q] into n pieces, moving to n + 1, ... if one would hit the axis.
std::vector<Pt> split(const Pt& p, const Pt& q, int n) {
  while (true) {
    std::vector<Pt> out;
    bool clean = true;
    for (int i = 1; i < n && clean; ++i) {
      Q t(i, n);
      Pt r{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
      if (sgn(r.y) == 0) clean = false;
      out.push_back(r);
    }
    if (clean) return out;
    ++n;
  }
}

}  // namespace

PLArc refine(const PLArc& arc, int parts) {
  if (parts < 1) throw std::invalid_argument("refine needs parts >= 1");
  PLArc out;
  for (std::size_t i = 0; i + 1 < arc.pts.size(); ++i) {
    out.pts.push_back(arc.pts[i]);
    // keep segments on the axis intact
    if (sgn(arc.pts[i].y) == 0 && sgn(arc.pts[i + 1].y) == 0) continue;
    for (auto& r : split(arc.pts[i], arc.pts[i + 1], parts)) out.pts.push_back(r);
  }
  out.pts.push_back(arc.pts.back());
  return out;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

Q round_to_grid(double v, int bits) {
  const double scale = std::ldexp(1.0, bits);
  return frac(mpz_class(std::to_string(std::llround(v * scale))), mpz_class(1) << bits);
}

// Image of the straight segment in log coordinates from the start point at argument -pi to the
// other branch point at argument -pi + 2 pi w. Radii stay between |b| and |a|.
PLArc log_spiral(bool from_a, int w, const SceneConfig& cfg) {
  const Pt A{cfg.a, 0}, B{cfg.b, 0};
  PLArc arc;
  arc.pts.push_back(from_a ? A : B);
  if (w != 0) {
    const double r0 = std::abs((from_a ? cfg.a : cfg.b).get_d());
    const double r1 = std::abs((from_a ? cfg.b : cfg.a).get_d());
    const int n = 64 * std::abs(w);
    for (int i = 1; i < n; ++i) {
      double t = static_cast<double>(i) / n;
      double r = std::pow(r0, 1 - t) * std::pow(r1, t);
      double th = -kPi + 2 * kPi * w * t;
      Pt p{round_to_grid(r * std::cos(th), 20), round_to_grid(r * std::sin(th), 20)};
      // samples at multiples of pi sit on the axis; lift them in the direction of travel
      if (sgn(p.y) == 0) p.y = frac(w > 0 ? 1 : -1, 1 << 20) * ((i * 2 * w / n) % 2 == 0 ? -1 : 1);
      arc.pts.push_back(p);
    }
  }
  arc.pts.push_back(from_a ? B : A);
  return arc;
}

}  // namespace

PLArc catalog_arc(const std::string& label, int k, const SceneConfig& cfg) {
  cfg.validate();
  if (label == "S") {
    if (k < -6 || k > 6) throw std::invalid_argument("S_k is catalogued for |k| <= 6");
    PLArc out = log_spiral(true, k, cfg);
    validate_arc(out, cfg);
    return out;
  }
  if (label == "S'") {
    if (k < -3 || k > 3) throw std::invalid_argument("S'_k is catalogued for |k| <= 3");
    PLArc out = log_spiral(false, -k, cfg);
    validate_arc(out, cfg);
    return out;
  }
  throw std::invalid_argument("unknown arc label: " + label);
}

namespace {

constexpr int kRings = 2048;

struct RingMap {
  std::vector<Q> bound2;  // squared inner radius of rings 1..K-1
  std::vector<std::pair<Q, Q>> rot;  // (cos, sin) of the half-turn level of each ring
  Q r1sq, r2sq;
  Pt c;

  explicit RingMap(const SceneConfig& cfg) {
    cfg.validate();
    c = {cfg.c0(), 0};
    r1sq = cfg.R1 * cfg.R1;
    r2sq = cfg.R2 * cfg.R2;
    for (int i = 1; i < kRings; ++i) {
      Q r = cfg.R1 + (cfg.R2 - cfg.R1) * frac(i, kRings);
      bound2.push_back(r * r);
    }
    for (int j = 0; j < kRings; ++j) {
      // staircase level pi (2(K - j) - 1) / 2K, realized by the rational point of tan(theta/2)
      double theta = kPi * (2.0 * (kRings - j) - 1) / (2.0 * kRings);
      Q t = round_to_grid(std::tan(theta / 2), 20);
      Q den = 1 + t * t;
      rot.push_back({(1 - t * t) / den, 2 * t / den});
    }
  }

  // -1 inside R1, kRings outside R2, else the ring index.
  int ring(const Pt& p) const {
    Q d = dist2(p, c);
    if (d <= r1sq) return -1;
    if (d >= r2sq) return kRings;
    return static_cast<int>(std::upper_bound(bound2.begin(), bound2.end(), d) - bound2.begin());
  }

  // Rotation by turns times the ring's half-turn level; turns is 1 or +-2.
  Pt apply(const Pt& p, int turns) const {
    int j = ring(p);
    if (j == kRings) return p;
    if (j == -1) return turns == 1 ? Pt{2 * c.x - p.x, -p.y} : p;
    auto [cs, sn] = rot[static_cast<std::size_t>(j)];
    if (turns < 0) sn = -sn;
    Pt q = p;
    for (int k = 0; k < std::abs(turns); ++k) q = {c.x + cs * (q.x - c.x) - sn * q.y, sn * (q.x - c.x) + cs * q.y};
    return q;
  }

  bool needs_split(const Pt& p, const Pt& q) const {
    if (dist2(p, c) <= r1sq && dist2(q, c) <= r1sq) return false;  // rigid inside the inner disk
    return seg_dist2(p, q, c) < r2sq;
  }
};

Q snap(const Q& v) {
  constexpr int kBits = 32;
  mpz_class num = v.get_num() << kBits;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
  return frac(q, mpz_class(1) << kBits);
}

PLArc zone_map(const PLArc& arc, const SceneConfig& cfg, int turns) {
  validate_arc(arc, cfg);
  RingMap rm(cfg);
  Q step(1, 32);
  std::string last_error;
  for (int attempt = 0; attempt < 4; ++attempt, step /= 2) {
    PLArc dense;
    for (std::size_t i = 0; i + 1 < arc.pts.size(); ++i) {
      const Pt &p = arc.pts[i], &q = arc.pts[i + 1];
      dense.pts.push_back(p);
      if (!rm.needs_split(p, q)) continue;
      Q l1 = abs(q.x - p.x) + abs(q.y - p.y);
      mpz_class n = l1.get_num() * step.get_den();
      mpz_class d = l1.get_den() * step.get_num();
      mpz_class pieces = (n + d - 1) / d;
      for (auto& r : split(p, q, static_cast<int>(pieces.get_si()))) dense.pts.push_back(r);
    }
    dense.pts.push_back(arc.pts.back());
    PLArc out;
    for (std::size_t i = 0; i < dense.pts.size(); ++i) {
      Pt q = rm.apply(dense.pts[i], turns);
      // Snap interior vertices so coordinates stay small under repeated maps; validation below
      // catches any snap that changes the picture.
      if (i > 0 && i + 1 < dense.pts.size()) q = {snap(q.x), snap(q.y)};
      out.pts.push_back(q);
    }
    try {
      validate_arc(out, cfg);
      for (std::size_t i = 1; i + 1 < out.pts.size(); ++i)
        if (sgn(out.pts[i].y) == 0) throw std::invalid_argument("mapped vertex landed on the axis");
      return out;
    } catch (const std::invalid_argument& e) {
      last_error = e.what();
    }
  }
  throw std::runtime_error("mapped arc failed validation after refinement: " + last_error);
}

}  // namespace

PLArc flop_map(const PLArc& arc, const SceneConfig& cfg) { return zone_map(arc, cfg, 1); }

PLArc dehn_twist_map(const PLArc& arc, const SceneConfig& cfg, bool inverse) {
  return zone_map(arc, cfg, inverse ? 2 : -2);
}

std::string phase_order_name(PhaseOrder p) {
  switch (p) {
    case PhaseOrder::Greater: return "greater";
    case PhaseOrder::Less: return "less";
    case PhaseOrder::Unspecified: return "unspecified";
  }
  return "?";
}

PhaseOrder phase_order(int i, int j) {
  if (i == j) throw std::invalid_argument("phase_order needs distinct indices");
  // S_0 is the largest and S_1 the smallest; these take priority over the chain rules.
  if (i == 0 || j == 1) return PhaseOrder::Greater;
  if (j == 0 || i == 1) return PhaseOrder::Less;
  if (i > 1 && j > 1) return i < j ? PhaseOrder::Greater : PhaseOrder::Less;
  if (i < 0 && j < 0) return i < j ? PhaseOrder::Greater : PhaseOrder::Less;
  return PhaseOrder::Unspecified;
}

}  // namespace flop
