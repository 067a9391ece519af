#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "efb/dense_matrix.hpp"
#include "efb/multivector.hpp"

namespace efb {

// Orthonormal generator gamma_i, 1 <= i <= 2m, with gamma_{2k-1}^2 = 1 and
// gamma_{2k}^2 = -1. Expands to exactly 2^m basis elements.
Element gamma(int m, int i);

// Witt basis p_i = (gamma_{2i-1} + gamma_{2i}) / 2, q_i = (gamma_{2i-1} - gamma_{2i}) / 2.
Element witt_p(int m, int i);
Element witt_q(int m, int i);

Element identity(int m);
// Volume element gamma_1 ... gamma_2m = prod [q_i, p_i].
Element omega(int m);
// Generator of the reversion automorphism, prod (p_i + s q_i), s = (-1)^{m+1}.
Element tau(int m);
Element omega_tau(int m);

// Bit (i-1) of mask selects gamma_i; factors multiply in ascending order.
struct GammaMonomial {
  std::uint64_t mask = 0;
  Rational coef{1};

  friend bool operator==(const GammaMonomial&, const GammaMonomial&) = default;
};

Element gamma_monomial(int m, std::uint64_t mask);
// Inverse of the unit-coefficient monomial: a signed copy of it.
Element gamma_monomial_inverse(int m, std::uint64_t mask);

Element from_gamma(int m, std::span<const GammaMonomial> expr);
// Sorted by grade, then by the ascending index list; zero coefficients
// omitted.
std::vector<GammaMonomial> to_gamma(const Element& v);

// Row a, column b under the binary encoding; coefficients carry the table
// sign so that to_matrix(u v) = to_matrix(u) to_matrix(v).
template <class S>
DenseMatrix<S> to_matrix(const Multivector<S>& v) {
  const std::size_t n = std::size_t{1} << v.dim();
  DenseMatrix<S> M(n, n);
  for (const auto& [idx, c] : v.terms()) {
    M(idx.row.bits(), idx.col.bits()) = table_sign(idx) < 0 ? S(-c) : c;
  }
  return M;
}

template <class S>
Multivector<S> from_matrix(const DenseMatrix<S>& M) {
  const std::size_t n = M.rows();
  if (n != M.cols() || n < 2 || (n & (n - 1)) != 0) throw DimensionError("matrix side must be 2^m");
  const int m = std::countr_zero(n);
  check_dim(m);
  std::vector<typename Multivector<S>::Term> terms;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const S& x = M(a, b);
      if (ScalarTraits<S>::is_zero(x)) continue;
      EfbIndex idx(Signature(m, a), Signature(m, b));
      terms.emplace_back(idx, table_sign(idx) < 0 ? S(-x) : x);
    }
  return Multivector<S>(m, std::move(terms));
}

// Matrix trace; only the diagonal Psi_aa contribute and they carry sign +1.
template <class S>
S trace(const Multivector<S>& v) {
  S t(0);
  for (const auto& [idx, c] : v.terms()) {
    if (idx.row == idx.col) t += c;
  }
  return t;
}

// trace(x y) without forming the product.
Rational trace_of_product(const Element& x, const Element& y);

}  // namespace efb
