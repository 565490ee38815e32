#include "flop/reps.hpp"

#include <stdexcept>

namespace flop {

Representation::Representation(int a, int b) : d0(a), d1(b), x(b, a), y(a, b), z(b, a), w(a, b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative dimension");
}

const Mat& Representation::arrow(Arrow a) const {
  switch (a) {
    case Arrow::x: return x;
    case Arrow::y: return y;
    case Arrow::z: return z;
    case Arrow::w: return w;
  }
  throw std::logic_error("bad arrow");
}

Mat& Representation::arrow(Arrow a) { return const_cast<Mat&>(std::as_const(*this).arrow(a)); }

Mat Representation::path_matrix(const std::string& word) const {
  if (word.empty()) throw std::invalid_argument("path_matrix needs a nonempty word");
  Path p = make_path(word);
  Mat m = Mat::identity(dim(p.source()));
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = arrow(*arrow_from_char(*it)) * m;
  return m;
}

void Representation::validate_shapes() const {
  auto ok = [](const Mat& m, int r, int c) {
    return m.rows() == static_cast<std::size_t>(r) && m.cols() == static_cast<std::size_t>(c);
  };
  if (d0 < 0 || d1 < 0) throw std::invalid_argument("negative dimension");
  if (!ok(x, d1, d0) || !ok(z, d1, d0) || !ok(y, d0, d1) || !ok(w, d0, d1))
    throw std::invalid_argument("arrow matrix shapes do not match dims");
}

bool operator==(const Representation& a, const Representation& b) {
  return a.d0 == b.d0 && a.d1 == b.d1 && a.x == b.x && a.y == b.y && a.z == b.z && a.w == b.w;
}

Representation simple(Vertex v) { return v == Vertex::v0 ? Representation(1, 0) : Representation(0, 1); }

Representation point(const Q& mx, const Q& mz) {
  if (sgn(mx) == 0 && sgn(mz) == 0) throw std::invalid_argument("point parameters both zero");
  Representation r(1, 1);
  r.x(0, 0) = mx;
  r.z(0, 0) = mz;
  return r;
}

Representation point_flopped(const Q& my, const Q& mw) {
  if (sgn(my) == 0 && sgn(mw) == 0) throw std::invalid_argument("point parameters both zero");
  Representation r(1, 1);
  r.y(0, 0) = my;
  r.w(0, 0) = mw;
  return r;
}

Representation v_plus(int m) {
  if (m < 1) throw std::invalid_argument("V+(m) needs m >= 1");
  Representation r(m - 1, m);
  for (int i = 0; i < m - 1; ++i) {
    r.x(i, i) = 1;
    r.z(i + 1, i) = 1;
  }
  return r;
}

Representation v_minus(int n) {
  if (n < 0) throw std::invalid_argument("V-(n) needs n >= 0");
  Representation r(n + 1, n);
  for (int i = 0; i < n; ++i) r.x(i, i) = 1;
  for (int i = 1; i <= n; ++i) r.z(i - 1, i) = 1;
  return r;
}

Representation v_plus_dagger(int m) {
  if (m < 1) throw std::invalid_argument("V+dagger(m) needs m >= 1");
  Representation r(m - 1, m);
  for (int i = 0; i < m - 1; ++i) {
    r.y(i, i) = 1;
    r.w(i, i + 1) = 1;
  }
  return r;
}

Representation v_minus_dagger(int n) {
  if (n < 0) throw std::invalid_argument("V-dagger(n) needs n >= 0");
  Representation r(n + 1, n);
  for (int i = 0; i < n; ++i) {
    r.y(i, i) = 1;
    r.w(i + 1, i) = 1;
  }
  return r;
}

Representation make_catalog_rep(const std::string& kind, const Q& a, const Q& b) {
  auto as_int = [](const Q& q) {
    if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw std::invalid_argument("expected an integer parameter");
    return static_cast<int>(q.get_num().get_si());
  };
  if (kind == "simple") {
    int v = as_int(a);
    if (v != 0 && v != 1) throw std::invalid_argument("simple needs vertex 0 or 1");
    return simple(v == 0 ? Vertex::v0 : Vertex::v1);
  }
  if (kind == "point") return point(a, b);
  if (kind == "point_flopped") return point_flopped(a, b);
  if (kind == "vplus") return v_plus(as_int(a));
  if (kind == "vminus") return v_minus(as_int(a));
  if (kind == "vplus_dagger") return v_plus_dagger(as_int(a));
  if (kind == "vminus_dagger") return v_minus_dagger(as_int(a));
  throw std::invalid_argument("unknown representation kind: " + kind);
}

bool relations_hold(const Representation& r) {
  r.validate_shapes();
  for (const auto& rel : relations()) {
    std::optional<Mat> acc;
    for (const auto& [p, c] : rel.terms()) {
      Mat t = c * r.path_matrix(p.word);
      acc = acc ? *acc + t : t;
    }
    if (acc && !acc->is_zero()) return false;
  }
  return true;
}

bool is_nilpotent(const Representation& r) {
  r.validate_shapes();
  // Image chain: U_{k+1} = sum of arrow images of U_k, starting from V.
  // It stabilizes after at most d0 + d1 steps; nilpotent iff it reaches 0.
  std::vector<Vec> u0, u1;
  for (int i = 0; i < r.d0; ++i) {
    Vec e(r.d0);
    e[i] = 1;
    u0.push_back(e);
  }
  for (int i = 0; i < r.d1; ++i) {
    Vec e(r.d1);
    e[i] = 1;
    u1.push_back(e);
  }
  for (int step = 0; step <= r.total() + 1; ++step) {
    if (u0.empty() && u1.empty()) return true;
    std::vector<Vec> n0, n1;
    for (const auto& v : u0) {
      n1.push_back(mul(r.x, v));
      n1.push_back(mul(r.z, v));
    }
    for (const auto& v : u1) {
      n0.push_back(mul(r.y, v));
      n0.push_back(mul(r.w, v));
    }
    u0 = n0.empty() ? n0 : column_basis(from_columns(n0, r.d0));
    u1 = n1.empty() ? n1 : column_basis(from_columns(n1, r.d1));
  }
  return u0.empty() && u1.empty();
}

RepCheck check_rep(const Representation& r) { return {relations_hold(r), is_nilpotent(r)}; }

Representation rescale(const Representation& r, Arrow a, const Q& s) {
  if (sgn(s) == 0) throw std::invalid_argument("rescale needs a nonzero scalar");
  Representation out = r;
  out.arrow(a) = s * r.arrow(a);
  return out;
}

}  // namespace flop
