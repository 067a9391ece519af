#include "efb/exact_linalg.hpp"

namespace efb::linalg {

RowEchelon rref(DenseMatrix<Rational> m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.matrix = std::move(m);
  return out;
}

DenseMatrix<Rational> inverse(const DenseMatrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw NotInvertibleError("non-square matrix has no inverse");
  DenseMatrix<Rational> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw NotInvertibleError("element is not invertible");
  DenseMatrix<Rational> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.matrix(r, n + c);
  return inv;
}

std::vector<std::vector<Rational>> null_space(const DenseMatrix<Rational>& m) {
  const RowEchelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.matrix(r, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;

  DenseMatrix<Rational> k(basis.size(), n);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) k(r, c) = basis[r][c];
  const RowEchelon ke = rref(std::move(k));
  std::vector<std::vector<Rational>> out(ke.rank(), std::vector<Rational>(n));
  for (std::size_t r = 0; r < ke.rank(); ++r)
    for (std::size_t c = 0; c < n; ++c) out[r][c] = ke.matrix(r, c);
  return out;
}

}  // namespace efb::linalg
