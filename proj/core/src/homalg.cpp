#include "flop/homalg.hpp"

#include "flop/truncated.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace flop {

namespace {

// Matrix of a linear map given as a function on coordinate vectors.
Mat matrix_of(std::size_t nin, std::size_t nout, const std::function<Vec(const Vec&)>& f) {
  Mat m(nout, nin);
  for (std::size_t j = 0; j < nin; ++j) {
    Vec e(nin);
    e[j] = 1;
    Vec col = f(e);
    for (std::size_t i = 0; i < nout; ++i) m(i, j) = col[i];
  }
  return m;
}

// Packs several matrices of fixed shapes into one coordinate vector.
struct Packing {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  std::size_t size() const {
    std::size_t n = 0;
    for (auto [r, c] : shapes) n += r * c;
    return n;
  }
  std::vector<Mat> unpack(const Vec& v) const {
    std::vector<Mat> out;
    std::size_t k = 0;
    for (auto [r, c] : shapes) {
      Mat m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = v[k++];
      out.push_back(std::move(m));
    }
    return out;
  }
  Vec pack(const std::vector<Mat>& ms) const {
    Vec v;
    v.reserve(size());
    for (const auto& m : ms)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
  }
};

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

Packing map_packing(const Representation& r, const Representation& s) {
  return {{{sz(s.d0), sz(r.d0)}, {sz(s.d1), sz(r.d1)}}};
}

// xi_x, xi_y, xi_z, xi_w in arrow order.
Packing xi_packing(const Representation& m, const Representation& n) {
  Packing p;
  for (Arrow a : kArrows) p.shapes.push_back({sz(n.dim(target(a))), sz(m.dim(source(a)))});
  return p;
}

Representation block(const Representation& m, const Representation& n, const ExtensionDatum& e) {
  Representation out(n.d0 + m.d0, n.d1 + m.d1);
  for (Arrow a : kArrows) {
    Mat& t = out.arrow(a);
    const Mat& na = n.arrow(a);
    const Mat& ma = m.arrow(a);
    const Mat& xa = e.xi[static_cast<std::size_t>(a)];
    std::size_t nr = na.rows(), nc = na.cols();
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) t(i, j) = na(i, j);
    for (std::size_t i = 0; i < xa.rows(); ++i)
      for (std::size_t j = 0; j < xa.cols(); ++j) t(i, nc + j) = xa(i, j);
    for (std::size_t i = 0; i < ma.rows(); ++i)
      for (std::size_t j = 0; j < ma.cols(); ++j) t(nr + i, nc + j) = ma(i, j);
  }
  return out;
}

// Upper right blocks of the four relation matrices of the block representation.
Vec cocycle_residual(const Representation& m, const Representation& n, const ExtensionDatum& e) {
  Representation b = block(m, n, e);
  Vec out;
  for (const auto& rel : relations()) {
    Path any = rel.terms().begin()->first;
    Vertex s = any.source(), t = any.target();
    Mat acc(sz(b.dim(t)), sz(b.dim(s)));
    for (const auto& [p, c] : rel.terms()) acc = acc + c * b.path_matrix(p.word);
    for (int i = 0; i < n.dim(t); ++i)
      for (int j = 0; j < m.dim(s); ++j) out.push_back(acc(sz(i), sz(n.dim(s) + j)));
  }
  return out;
}

std::size_t residual_size(const Representation& m, const Representation& n) {
  std::size_t k = 0;
  for (const auto& rel : relations()) {
    Path any = rel.terms().begin()->first;
    k += sz(n.dim(any.target())) * sz(m.dim(any.source()));
  }
  return k;
}

ExtensionDatum datum(const Packing& p, const Vec& v) {
  auto ms = p.unpack(v);
  ExtensionDatum e;
  for (std::size_t i = 0; i < 4; ++i) e.xi[i] = std::move(ms[i]);
  return e;
}

Mat coboundary_matrix(const Representation& m, const Representation& n) {
  Packing eta{{{sz(n.d0), sz(m.d0)}, {sz(n.d1), sz(m.d1)}}};
  Packing xi = xi_packing(m, n);
  return matrix_of(eta.size(), xi.size(), [&](const Vec& v) {
    auto es = eta.unpack(v);
    std::vector<Mat> out;
    for (Arrow a : kArrows) {
      const Mat& et = es[static_cast<std::size_t>(idx(target(a)))];
      const Mat& es_ = es[static_cast<std::size_t>(idx(source(a)))];
      out.push_back(et * m.arrow(a) - n.arrow(a) * es_);
    }
    return xi.pack(out);
  });
}

Mat cocycle_matrix(const Representation& m, const Representation& n) {
  Packing xi = xi_packing(m, n);
  return matrix_of(xi.size(), residual_size(m, n), [&](const Vec& v) { return cocycle_residual(m, n, datum(xi, v)); });
}

}  // namespace

bool is_module_map(const Representation& r, const Representation& s, const ModuleMap& f) {
  if (f.f0.rows() != sz(s.d0) || f.f0.cols() != sz(r.d0) || f.f1.rows() != sz(s.d1) || f.f1.cols() != sz(r.d1))
    return false;
  for (Arrow a : kArrows) {
    const Mat& ft = target(a) == Vertex::v0 ? f.f0 : f.f1;
    const Mat& fs = source(a) == Vertex::v0 ? f.f0 : f.f1;
    if (!(ft * r.arrow(a) == s.arrow(a) * fs)) return false;
  }
  return true;
}

bool is_injective(const ModuleMap& f) { return rank(f.f0) == f.f0.cols() && rank(f.f1) == f.f1.cols(); }
bool is_surjective(const ModuleMap& f) { return rank(f.f0) == f.f0.rows() && rank(f.f1) == f.f1.rows(); }
ModuleMap compose(const ModuleMap& g, const ModuleMap& f) { return {g.f0 * f.f0, g.f1 * f.f1}; }

std::vector<ModuleMap> hom(const Representation& r, const Representation& s) {
  Packing pk = map_packing(r, s);
  std::size_t nout = 0;
  for (Arrow a : kArrows) nout += sz(s.dim(target(a))) * sz(r.dim(source(a)));
  Mat sys = matrix_of(pk.size(), nout, [&](const Vec& v) {
    auto fs = pk.unpack(v);
    std::vector<Mat> res;
    for (Arrow a : kArrows)
      res.push_back(fs[sz(idx(target(a)))] * r.arrow(a) - s.arrow(a) * fs[sz(idx(source(a)))]);
    Packing out;
    for (const auto& m : res) out.shapes.push_back({m.rows(), m.cols()});
    return out.pack(res);
  });
  std::vector<ModuleMap> out;
  for (const auto& v : nullspace(sys)) {
    auto fs = pk.unpack(v);
    out.push_back({fs[0], fs[1]});
  }
  return out;
}

bool is_cocycle(const Representation& m, const Representation& n, const ExtensionDatum& e) {
  for (const auto& q : cocycle_residual(m, n, e))
    if (sgn(q) != 0) return false;
  return true;
}

bool is_coboundary(const Representation& m, const Representation& n, const ExtensionDatum& e) {
  Packing xi = xi_packing(m, n);
  Mat b = coboundary_matrix(m, n);
  Vec v = xi.pack({e.xi[0], e.xi[1], e.xi[2], e.xi[3]});
  if (b.cols() == 0) {
    for (const auto& q : v)
      if (sgn(q) != 0) return false;
    return true;
  }
  return solve(b, v).has_value();
}

Ext1Result ext1(const Representation& m, const Representation& n) {
  m.validate_shapes();
  n.validate_shapes();
  Packing xi = xi_packing(m, n);
  std::vector<Vec> cocycles = nullspace(cocycle_matrix(m, n));
  Mat b = coboundary_matrix(m, n);
  std::vector<Vec> span;
  for (std::size_t j = 0; j < b.cols(); ++j) span.push_back(b.col(j));
  std::size_t r = span.empty() ? 0 : rank(from_columns(span, xi.size()));
  Ext1Result out;
  for (const auto& z : cocycles) {
    span.push_back(z);
    std::size_t r2 = rank(from_columns(span, xi.size()));
    if (r2 > r) {
      r = r2;
      out.basis.push_back(datum(xi, z));
    } else {
      span.pop_back();
    }
  }
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

Extension build_extension(const Representation& m, const Representation& n, const ExtensionDatum& xi) {
  Packing pk = xi_packing(m, n);
  for (std::size_t i = 0; i < 4; ++i)
    if (xi.xi[i].rows() != pk.shapes[i].first || xi.xi[i].cols() != pk.shapes[i].second)
      throw std::invalid_argument("extension datum has the wrong shape");
  if (!is_cocycle(m, n, xi)) throw std::invalid_argument("extension datum violates the cocycle condition");
  Extension e;
  e.total = block(m, n, xi);
  auto incl = [](int small, int big) {
    Mat i(sz(big), sz(small));
    for (int k = 0; k < small; ++k) i(sz(k), sz(k)) = 1;
    return i;
  };
  auto proj = [](int off, int small, int big) {
    Mat p(sz(small), sz(big));
    for (int k = 0; k < small; ++k) p(sz(k), sz(off + k)) = 1;
    return p;
  };
  e.inclusion = {incl(n.d0, e.total.d0), incl(n.d1, e.total.d1)};
  e.projection = {proj(n.d0, m.d0, e.total.d0), proj(n.d1, m.d1, e.total.d1)};
  return e;
}

bool verify_ses(const Representation& n, const Extension& e, const Representation& m) {
  if (!check_rep(e.total).relations_ok) return false;
  if (!is_module_map(n, e.total, e.inclusion) || !is_module_map(e.total, m, e.projection)) return false;
  if (!is_injective(e.inclusion) || !is_surjective(e.projection)) return false;
  ModuleMap c = compose(e.projection, e.inclusion);
  if (!c.f0.is_zero() || !c.f1.is_zero()) return false;
  return e.total.d0 == n.d0 + m.d0 && e.total.d1 == n.d1 + m.d1;
}

bool iso_check(const Representation& r, const Representation& s, std::uint64_t seed) {
  if (r.d0 != s.d0 || r.d1 != s.d1) return false;
  if (r.total() == 0) return true;
  auto basis = hom(r, s);
  if (basis.empty()) return false;
  // A random combination is invertible unless the determinant polynomial vanishes identically.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-64, 64);
  for (int trial = 0; trial < 12; ++trial) {
    ModuleMap f{Mat(sz(s.d0), sz(r.d0)), Mat(sz(s.d1), sz(r.d1))};
    for (const auto& b : basis) {
      Q c = coeff(rng);
      f.f0 = f.f0 + c * b.f0;
      f.f1 = f.f1 + c * b.f1;
    }
    if (inverse(f.f0) && inverse(f.f1)) return true;
  }
  return false;
}

Representation catalog_sphere(int k) { return k >= 1 ? v_plus(k) : v_minus(-k); }

SphereImage psi_sphere(int k, std::uint64_t seed) {
  if (k < -5 || k > 5) throw std::invalid_argument("psi_sphere needs |k| <= 5");
  SphereImage out;
  if (k == 0 || k == 1) {
    out.rep = simple(k == 0 ? Vertex::v0 : Vertex::v1);
    out.steps.push_back("S_" + std::to_string(k) + ": vertex simple");
    return out;
  }
  const Representation pt = point(1, -1);
  int step = k > 0 ? 1 : -1;
  Representation cur = simple(k > 0 ? Vertex::v1 : Vertex::v0);
  for (int j = k > 0 ? 2 : -1; k > 0 ? j <= k : j >= k; j += step) {
    // k > 0: previous object is the sub, the point the quotient; k < 0 the other way round
    const Representation& m = k > 0 ? pt : cur;
    const Representation& n = k > 0 ? cur : pt;
    Ext1Result e = ext1(m, n);
    if (e.dim == 0) throw std::runtime_error("no nonzero extension class at S_" + std::to_string(j));
    const Representation want = catalog_sphere(j);
    bool found = false;
    for (const auto& xi : e.basis) {
      Extension ext = build_extension(m, n, xi);
      if (!verify_ses(n, ext, m)) throw std::runtime_error("short exact sequence check failed at S_" + std::to_string(j));
      if (!iso_check(ext.total, want, seed)) continue;
      std::ostringstream os;
      os << "S_" << j << ": ext1 dim " << e.dim << ", cone is (" << ext.total.d0 << ',' << ext.total.d1
         << "), isomorphic to the catalog module";
      out.steps.push_back(os.str());
      cur = ext.total;
      found = true;
      break;
    }
    if (!found) throw std::runtime_error("extension at S_" + std::to_string(j) + " is not the catalog module");
  }
  out.rep = cur;
  return out;
}

// ---- minimal projective resolutions over the truncated algebra ----

namespace {

// Graded free left module: generator g spans P_{u(g)} shifted to internal degree s(g).
struct GradedFree {
  std::vector<Vertex> u;
  std::vector<int> s;
  // images in the previous module: (generator, coefficient from its vertex to u(g))
  std::vector<std::vector<std::pair<std::size_t, FreePathElement>>> img;
};

FreePathElement basis_element(Vertex u, const std::string& word) {
  return word.empty() ? FreePathElement::path(idempotent(u)) : FreePathElement::word(word);
}

// Coordinates of the internal-degree l piece landing at vertex w.
struct Piece {
  std::vector<std::size_t> offset;  // per generator, or npos
  std::vector<int> len;
  std::size_t size = 0;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Piece piece(const GradedFree& f, int l, Vertex w, const TruncatedAlgebra& a) {
  Piece p;
  for (std::size_t g = 0; g < f.u.size(); ++g) {
    int len = l - f.s[g];
    if (len < 0 || len > a.cutoff() || TruncatedAlgebra::component_target(f.u[g], len) != w) {
      p.offset.push_back(npos);
      p.len.push_back(-1);
      continue;
    }
    p.offset.push_back(p.size);
    p.len.push_back(len);
    p.size += a.dim(f.u[g], len);
  }
  return p;
}

// Matrix of the differential from f (with images in g) on the degree l, vertex w piece.
Mat piece_map(const GradedFree& f, const GradedFree& g, int l, Vertex w, const TruncatedAlgebra& a) {
  Piece src = piece(f, l, w, a), dst = piece(g, l, w, a);
  Mat m(dst.size, src.size);
  for (std::size_t i = 0; i < f.u.size(); ++i) {
    if (src.offset[i] == npos) continue;
    const auto& words = a.basis(f.u[i], src.len[i]);
    for (std::size_t k = 0; k < words.size(); ++k) {
      FreePathElement p = basis_element(f.u[i], words[k]);
      for (const auto& [h, c] : f.img[i]) {
        if (dst.offset[h] == npos) throw std::logic_error("resolution map leaves the truncation window");
        Vec v = a.reduce_component(p * c, g.u[h], dst.len[h]);
        for (std::size_t r = 0; r < v.size(); ++r) m(dst.offset[h] + r, src.offset[i] + k) += v[r];
      }
    }
  }
  return m;
}

// Left multiplication by an arrow from the (l, w) piece to the (l+1, target) piece.
Vec arrow_times(const GradedFree& f, Arrow ar, int l, Vertex w, const Vec& v, const TruncatedAlgebra& a) {
  Piece src = piece(f, l, w, a), dst = piece(f, l + 1, target(ar), a);
  Vec out(dst.size);
  FreePathElement ae = arrow_element(ar);
  for (std::size_t i = 0; i < f.u.size(); ++i) {
    if (src.offset[i] == npos) continue;
    if (dst.offset[i] == npos) throw std::logic_error("arrow action leaves the truncation window");
    const auto& words = a.basis(f.u[i], src.len[i]);
    for (std::size_t k = 0; k < words.size(); ++k) {
      const Q& c = v[src.offset[i] + k];
      if (sgn(c) == 0) continue;
      Vec r = a.reduce_component(ae * basis_element(f.u[i], words[k]), f.u[i], dst.len[i]);
      for (std::size_t j = 0; j < r.size(); ++j) out[dst.offset[i] + j] += c * r[j];
    }
  }
  return out;
}

// Minimal generators of the kernel of f -> g in degrees [lo, hi]; g may have no generators.
GradedFree kernel_generators(const GradedFree& f, const GradedFree& g, int lo, int hi, const TruncatedAlgebra& a) {
  GradedFree out;
  std::map<std::pair<int, int>, std::vector<Vec>> ker;  // (l, vertex) -> kernel basis
  for (int l = lo; l <= hi; ++l)
    for (Vertex w : kVertices) {
      Piece p = piece(f, l, w, a);
      if (p.size == 0) continue;
      Mat m = piece_map(f, g, l, w, a);
      std::vector<Vec> k = nullspace(m);
      ker[{l, idx(w)}] = k;
      if (k.empty()) continue;
      std::vector<Vec> span;
      Vertex prev = other(w);
      if (l > lo)
        for (const auto& v : ker[{l - 1, idx(prev)}])
          for (Arrow ar : kArrows)
            if (source(ar) == prev) span.push_back(arrow_times(f, ar, l - 1, prev, v, a));
      std::size_t r = span.empty() ? 0 : rank(from_columns(span, p.size));
      for (const auto& v : k) {
        span.push_back(v);
        std::size_t r2 = rank(from_columns(span, p.size));
        if (r2 == r) {
          span.pop_back();
          continue;
        }
        r = r2;
        out.u.push_back(w);
        out.s.push_back(l);
        std::vector<std::pair<std::size_t, FreePathElement>> im;
        for (std::size_t i = 0; i < f.u.size(); ++i) {
          if (p.offset[i] == npos) continue;
          const auto& words = a.basis(f.u[i], p.len[i]);
          FreePathElement e;
          for (std::size_t j = 0; j < words.size(); ++j)
            if (sgn(v[p.offset[i] + j]) != 0) e = e + v[p.offset[i] + j] * basis_element(f.u[i], words[j]);
          if (!e.is_zero()) im.push_back({i, e});
        }
        out.img.push_back(std::move(im));
      }
    }
  return out;
}

Mat action_matrix(const Representation& m, const FreePathElement& c, Vertex s, Vertex t) {
  Mat out(sz(m.dim(t)), sz(m.dim(s)));
  for (const auto& [p, q] : c.terms()) {
    Mat pm = p.word.empty() ? Mat::identity(sz(m.dim(s))) : m.path_matrix(p.word);
    out = out + q * pm;
  }
  return out;
}

// Hom(P^i, M) -> Hom(P^{i+1}, M).
Mat hom_differential(const GradedFree& pi, const GradedFree& next, const Representation& m) {
  std::vector<std::size_t> off_i, off_n;
  std::size_t ni = 0, nn = 0;
  for (Vertex u : pi.u) {
    off_i.push_back(ni);
    ni += sz(m.dim(u));
  }
  for (Vertex u : next.u) {
    off_n.push_back(nn);
    nn += sz(m.dim(u));
  }
  Mat d(nn, ni);
  for (std::size_t h = 0; h < next.u.size(); ++h)
    for (const auto& [g, c] : next.img[h]) {
      Mat a = action_matrix(m, c, pi.u[g], next.u[h]);
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t col = 0; col < a.cols(); ++col) d(off_n[h] + r, off_i[g] + col) += a(r, col);
    }
  return d;
}

}  // namespace

ExtDims ext_dims_at(Vertex v, const Representation& m, int N) {
  if (N < 6 || N > TruncatedAlgebra::kMaxCutoff) throw std::invalid_argument("ext_dims needs 6 <= N <= 12");
  if (!check_rep(m).nilpotent) throw std::invalid_argument("ext_dims needs a nilpotent module");
  TruncatedAlgebra a(N);
  const int cap = N - 2;
  std::vector<GradedFree> p(5);
  p[0].u = {v};
  p[0].s = {0};
  p[0].img = {{}};
  GradedFree none;
  p[1] = kernel_generators(p[0], none, 1, cap, a);
  for (int i = 2; i <= 4; ++i) p[i] = kernel_generators(p[i - 1], p[i - 2], 0, cap, a);

  ExtDims out;
  std::size_t prev_rank = 0;
  for (int i = 0; i <= 3; ++i) {
    std::size_t dim_hom = 0;
    for (Vertex u : p[i].u) dim_hom += sz(m.dim(u));
    Mat d = hom_differential(p[i], p[i + 1], m);
    std::size_t rk = d.rows() == 0 || d.cols() == 0 ? 0 : rank(d);
    out.dims[sz(i)] = static_cast<int>(dim_hom - rk - prev_rank);
    prev_rank = rk;
  }
  return out;
}

ExtDims ext_dims(Vertex v, const Representation& m, int N) {
  ExtDims a = ext_dims_at(v, m, N);
  ExtDims b = ext_dims_at(v, m, N + 1);
  if (a.dims != b.dims) throw std::runtime_error("Ext dimensions did not stabilize between N and N+1");
  return a;
}

DimVec flop_K(const DimVec& d) { return {-d.first + 2 * d.second, d.second}; }

FlopPointReport flop_point_analysis(const Representation& pt, const StabilityParams& p) {
  if (pt.d0 != 1 || pt.d1 != 1 || !pt.y.is_zero() || !pt.w.is_zero() || (pt.x.is_zero() && pt.z.is_zero()))
    throw std::invalid_argument("flop_point_analysis needs a point module with y = w = 0");
  if (chamber(p) != Chamber::Zeta1Greater) throw std::invalid_argument("parameters must lie in the chamber zeta0 < zeta1");
  FlopPointReport r;
  r.sub = simple(Vertex::v1);
  r.quotient = simple(Vertex::v0);
  ExtensionDatum xi;
  xi.xi[static_cast<std::size_t>(Arrow::x)] = pt.x;
  xi.xi[static_cast<std::size_t>(Arrow::z)] = pt.z;
  xi.xi[static_cast<std::size_t>(Arrow::y)] = Mat(0, 0);
  xi.xi[static_cast<std::size_t>(Arrow::w)] = Mat(0, 0);
  r.triangle = build_extension(r.quotient, r.sub, xi);
  if (!(r.triangle.total == pt) || !verify_ses(r.sub, r.triangle, r.quotient))
    throw std::runtime_error("point module is not the expected extension of simples");
  r.k_class = flop_K({1, 1});
  r.verdict = is_stable(pt, p);
  if (r.verdict.witness)
    r.witness_phase_exceeds = phase_lt(central_charge(pt, p), central_charge(r.verdict.witness->dims(), p));
  return r;
}

}  // namespace flop
