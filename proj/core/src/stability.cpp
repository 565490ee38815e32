#include "flop/stability.hpp"

#include "flop/fpscan.hpp"
#include "flop/truncated.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace flop {

bool admissible(const CQ& z) { return sgn(z.im) > 0 || (sgn(z.im) == 0 && sgn(z.re) < 0); }

void validate(const StabilityParams& p) {
  if (!admissible(p.z0) || !admissible(p.z1))
    throw std::invalid_argument("central charges must have phase in (0, pi]");
}

bool on_wall(const StabilityParams& p) {
  validate(p);
  return cross_sign(p.z0, p.z1) == 0;
}

Chamber chamber(const StabilityParams& p) {
  validate(p);
  int s = cross_sign(p.z1, p.z0);  // > 0 iff arg z1 < arg z0
  if (s == 0) return Chamber::Wall;
  return s > 0 ? Chamber::Zeta0Greater : Chamber::Zeta1Greater;
}

std::string chamber_name(Chamber c) {
  switch (c) {
    case Chamber::Zeta0Greater: return "zeta0>zeta1";
    case Chamber::Zeta1Greater: return "zeta0<zeta1";
    case Chamber::Wall: return "wall";
  }
  return "?";
}

bool phase_lt(const CQ& u, const CQ& v) {
  if (u.is_zero() || v.is_zero()) throw std::invalid_argument("phase of zero is undefined");
  if (!admissible(u) || !admissible(v)) throw std::invalid_argument("phase outside (0, pi]");
  return cross_sign(u, v) > 0;
}

CQ central_charge(const DimVec& d, const StabilityParams& p) {
  if (d.first < 0 || d.second < 0) throw std::invalid_argument("negative dimension vector");
  if (d.first == 0 && d.second == 0) throw std::invalid_argument("central charge of the zero representation");
  return Q(d.first) * p.z0 + Q(d.second) * p.z1;
}

CQ central_charge(const Representation& r, const StabilityParams& p) { return central_charge(DimVec{r.d0, r.d1}, p); }

namespace {

std::vector<Vec> span_basis(const std::vector<Vec>& vs, int n) {
  if (vs.empty() || n == 0) return {};
  // rref rows give a canonical basis of the span
  Echelon e = rref(from_columns(vs, static_cast<std::size_t>(n)).transpose());
  std::vector<Vec> out;
  for (std::size_t i = 0; i < e.rank(); ++i) out.push_back(e.rref.row(i));
  return out;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, int n) {
  if (basis.empty()) {
    for (const auto& q : v)
      if (sgn(q) != 0) return false;
    return true;
  }
  return solve(from_columns(basis, static_cast<std::size_t>(n)), v).has_value();
}

std::vector<Vec> kernel_vectors(const Mat& m) {
  if (m.cols() == 0) return {};
  if (m.rows() == 0) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < m.cols(); ++i) {
      Vec e(m.cols());
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }
  return nullspace(m);
}

Mat stack(const std::vector<Mat>& ms, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : ms) rows += m.rows();
  Mat out(rows, cols);
  std::size_t r = 0;
  for (const auto& m : ms)
    for (std::size_t i = 0; i < m.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out(r, j) = m(i, j);
  return out;
}

std::vector<std::string> words_of(Vertex s, int len) {
  std::vector<std::string> out{""};
  Vertex cur = s;
  for (int i = 0; i < len; ++i) {
    std::vector<std::string> next;
    const char* letters = cur == Vertex::v0 ? "xz" : "yw";
    for (const auto& wd : out)
      for (int k = 0; k < 2; ++k) next.push_back(std::string(1, letters[k]) + wd);
    out = std::move(next);
    cur = other(cur);
  }
  return out;
}

}  // namespace

bool is_subrep(const Representation& r, const SubRep& s) {
  for (const auto& v : s.v0)
    for (Arrow a : {Arrow::x, Arrow::z})
      if (!in_span(s.v1, mul(r.arrow(a), v), r.d1)) return false;
  for (const auto& v : s.v1)
    for (Arrow a : {Arrow::y, Arrow::w})
      if (!in_span(s.v0, mul(r.arrow(a), v), r.d0)) return false;
  return true;
}

SubRep generated_subrep(const Representation& r, std::vector<Vec> g0, std::vector<Vec> g1) {
  SubRep s{span_basis(g0, r.d0), span_basis(g1, r.d1)};
  while (true) {
    std::vector<Vec> n0 = s.v0, n1 = s.v1;
    for (const auto& v : s.v0) {
      n1.push_back(mul(r.x, v));
      n1.push_back(mul(r.z, v));
    }
    for (const auto& v : s.v1) {
      n0.push_back(mul(r.y, v));
      n0.push_back(mul(r.w, v));
    }
    SubRep t{span_basis(n0, r.d0), span_basis(n1, r.d1)};
    if (t.dims() == s.dims()) return t;
    s = std::move(t);
  }
}

std::vector<SubRep> candidate_subreps(const Representation& r) {
  std::vector<SubRep> raw;
  auto unit = [](int n, int i) {
    Vec e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(i)] = 1;
    return e;
  };
  for (int i = 0; i < r.d0; ++i) raw.push_back(generated_subrep(r, {unit(r.d0, i)}, {}));
  for (int i = 0; i < r.d1; ++i) raw.push_back(generated_subrep(r, {}, {unit(r.d1, i)}));

  for (Vertex s : kVertices) {
    if (r.dim(s) == 0) continue;
    for (int len = 1; len <= 4; ++len)
      for (const auto& wd : words_of(s, len)) {
        Mat m = r.path_matrix(wd);
        Vertex t = TruncatedAlgebra::component_target(s, len);
        std::vector<Vec> img;
        for (std::size_t j = 0; j < m.cols(); ++j) img.push_back(m.col(j));
        std::vector<Vec> ker = kernel_vectors(m);
        if (t == Vertex::v0)
          raw.push_back(generated_subrep(r, img, {}));
        else
          raw.push_back(generated_subrep(r, {}, img));
        if (s == Vertex::v0)
          raw.push_back(generated_subrep(r, ker, {}));
        else
          raw.push_back(generated_subrep(r, {}, ker));
      }
  }

  // Radical layers: rad^k is spanned by images of all paths of length >= k.
  // Socle layers: soc^k is killed by all paths of length k.
  for (int k = 1; k <= r.total(); ++k) {
    std::vector<Vec> rad0, rad1;
    SubRep soc;
    for (Vertex s : kVertices) {
      if (r.dim(s) == 0) continue;
      std::vector<Mat> kill;
      for (int len = k; len <= k + 1; ++len)
        for (const auto& wd : words_of(s, len)) {
          Mat m = r.path_matrix(wd);
          Vertex t = TruncatedAlgebra::component_target(s, len);
          for (std::size_t j = 0; j < m.cols(); ++j) (t == Vertex::v0 ? rad0 : rad1).push_back(m.col(j));
          if (len == k) kill.push_back(m);
        }
      std::vector<Vec> ker = kernel_vectors(stack(kill, static_cast<std::size_t>(r.dim(s))));
      (s == Vertex::v0 ? soc.v0 : soc.v1) = ker;
    }
    raw.push_back(generated_subrep(r, rad0, rad1));
    raw.push_back(generated_subrep(r, soc.v0, soc.v1));
  }

  std::vector<SubRep> out;
  std::set<std::pair<std::vector<Vec>, std::vector<Vec>>> seen;
  for (auto& s : raw) {
    DimVec d = s.dims();
    if ((d.first == 0 && d.second == 0) || (d.first == r.d0 && d.second == r.d1)) continue;
    if (seen.insert({s.v0, s.v1}).second) out.push_back(std::move(s));
  }
  return out;
}

std::string verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Stable: return "Stable";
    case VerdictKind::SemistableOnly: return "SemistableOnly";
    case VerdictKind::Unstable: return "Unstable";
    case VerdictKind::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string StabilityVerdict::describe() const {
  std::ostringstream os;
  os << verdict_name(kind);
  if (kind == VerdictKind::Stable) {
    os << " (primes";
    for (int p : primes) os << ' ' << p;
    os << ')';
  }
  if (witness) os << " witness (" << witness->dims().first << ',' << witness->dims().second << ')';
  for (const auto& d : flagged) os << " flagged (" << d.first << ',' << d.second << ')';
  return os.str();
}

StabilityVerdict is_stable(const Representation& r, const StabilityParams& p) {
  if (r.total() == 0) throw std::invalid_argument("stability of the zero representation");
  RepCheck rc = check_rep(r);
  if (!rc.relations_ok) throw std::invalid_argument("representation violates the relations");
  if (!rc.nilpotent) throw std::invalid_argument("representation is not nilpotent");
  if (chamber(p) == Chamber::Wall) throw std::invalid_argument("parameters lie on the wall");

  const CQ total = central_charge(r, p);
  auto bigger = [&](const DimVec& d) { return phase_lt(total, central_charge(d, p)); };
  auto equal = [&](const DimVec& d) { return cross_sign(total, central_charge(d, p)) == 0; };

  StabilityVerdict v;
  std::optional<SubRep> equal_witness;
  for (auto& s : candidate_subreps(r)) {
    if (bigger(s.dims())) {
      v.kind = VerdictKind::Unstable;
      v.witness = std::move(s);
      return v;
    }
    if (!equal_witness && equal(s.dims())) equal_witness = std::move(s);
  }

  bool scannable = r.d0 <= kScanMaxDim && r.d1 <= kScanMaxDim;
  std::set<DimVec> realized;
  if (scannable) {
    bool first = true;
    for (int prime : {2, 3, 5}) {
      std::set<DimVec> here;
      for (const auto& [d, n] : subrep_scan_Fp(r, prime)) here.insert(d);
      if (first) {
        realized = here;
        first = false;
      } else {
        std::set<DimVec> keep;
        for (const auto& d : realized)
          if (here.count(d)) keep.insert(d);
        realized = keep;
      }
      v.primes.push_back(prime);
    }
  }
  for (const auto& d : realized) {
    if ((d.first == 0 && d.second == 0) || (d.first == r.d0 && d.second == r.d1)) continue;
    if (bigger(d) || (equal(d) && !equal_witness)) v.flagged.push_back(d);
  }
  if (!scannable || !v.flagged.empty()) {
    v.kind = VerdictKind::Undetermined;
    v.primes.clear();
    return v;
  }
  if (equal_witness) {
    v.kind = VerdictKind::SemistableOnly;
    v.primes.clear();
    v.witness = std::move(equal_witness);
    return v;
  }
  v.kind = VerdictKind::Stable;
  return v;
}

}  // namespace flop
