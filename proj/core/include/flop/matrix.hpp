#pragma once

#include "flop/rational.hpp"

#include <optional>
#include <vector>

namespace flop {

// Dense exact matrix, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<std::vector<Q>>& rows, std::size_t cols);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Q& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const;
  Mat transpose() const;
  std::vector<Q> row(std::size_t i) const;
  std::vector<Q> col(std::size_t j) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Q& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Q> a_;
};

using Vec = std::vector<Q>;

Vec mul(const Mat& a, const Vec& v);

struct Echelon {
  Mat rref;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(Mat m);
std::size_t rank(const Mat& m);

// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vec> nullspace(const Mat& m);

// Some v with m v = b, if any.
std::optional<Vec> solve(const Mat& m, const Vec& b);

std::optional<Mat> inverse(const Mat& m);

// Matrix whose columns are the given vectors (all of length n).
Mat from_columns(const std::vector<Vec>& cols, std::size_t n);

// Basis (as columns) of the column space.
std::vector<Vec> column_basis(const Mat& m);

// Positive rescaling to coprime integer entries (zero stays zero).
Mat primitive_integer(const Mat& m);

}  // namespace flop
