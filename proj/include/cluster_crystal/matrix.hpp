#pragma once

#include <cstddef>
#include <vector>

#include "cluster_crystal/errors.hpp"
#include "cluster_crystal/rational.hpp"

namespace cluster_crystal {

/// Dense row-major matrix.  Storage is 0-based; the minor helpers below take
/// 1-based row and column lists because that is how the formulas read.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("shape_mismatch", "matrix product with incompatible shapes");
    Matrix out(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<long>;

Rational determinant(RationalMatrix m);

/// Determinant of the submatrix with the given 1-based rows and columns, in
/// the listed order.  The empty minor is 1.
Rational minor(const RationalMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Leading principal minor of size k (k = 0 gives 1).
Rational leading_minor(const RationalMatrix& m, int k);

RationalMatrix to_rational(const IntMatrix& m);

}  // namespace cluster_crystal
