#include "flop/matrix.hpp"

#include <stdexcept>

namespace flop {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Q>>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool Mat::is_zero() const {
  for (const auto& q : a_)
    if (sgn(q) != 0) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Q> Mat::row(std::size_t i) const {
  return std::vector<Q>(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
}

std::vector<Q> Mat::col(std::size_t j) const {
  std::vector<Q> v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch in product");
  Mat p(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Q& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (sgn(b(k, j)) != 0) p(i, j) += aik * b(k, j);
    }
  return p;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch in sum");
  Mat s = a;
  for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += b.a_[i];
  return s;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch in difference");
  Mat s = a;
  for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] -= b.a_[i];
  return s;
}

Mat operator*(const Q& s, const Mat& a) {
  Mat m = a;
  for (auto& q : m.a_) q *= s;
  return m;
}

bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

Vec mul(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

Echelon rref(Mat m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Q inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Q f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

std::vector<Vec> nullspace(const Mat& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(aug);
  Vec x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rref(i, m.cols());
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

Mat from_columns(const std::vector<Vec>& cols, std::size_t n) {
  Mat m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Vec> column_basis(const Mat& m) {
  Echelon e = rref(m);
  std::vector<Vec> out;
  for (auto p : e.pivots) out.push_back(m.col(p));
  return out;
}

Mat primitive_integer(const Mat& m) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
  Mat s = Q(l) * m;
  mpz_class g = 0;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) g = gcd(g, s(i, j).get_num());
  if (g == 0) return s;
  return Q(1, 1) / Q(g) * s;
}

}  // namespace flop
