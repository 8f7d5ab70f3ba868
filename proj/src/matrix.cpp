#include "cluster_crystal/matrix.hpp"

#include <utility>

namespace cluster_crystal {

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw DomainError("shape_mismatch", "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Rational minor(const RationalMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw DomainError("shape_mismatch", "minor needs as many rows as columns");
  if (rows.empty()) return Rational(1);
  RationalMatrix sub(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const int r = rows[a], c = cols[b];
      if (r < 1 || c < 1 || static_cast<std::size_t>(r) > m.rows() || static_cast<std::size_t>(c) > m.cols()) {
        throw DomainError("shape_mismatch", "minor index out of range");
      }
      sub(a, b) = m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1));
    }
  }
  return determinant(std::move(sub));
}

Rational leading_minor(const RationalMatrix& m, int k) {
  std::vector<int> idx;
  for (int i = 1; i <= k; ++i) idx.push_back(i);
  return minor(m, idx, idx);
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace cluster_crystal
