#pragma once

#include <utility>
#include <vector>

#include "efb/dense_matrix.hpp"

// Exact elimination over the rationals.
namespace efb::linalg {

struct RowEchelon {
  DenseMatrix<Rational> matrix;    // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form with unit pivots, pivot columns scanned left to
// right.
RowEchelon rref(DenseMatrix<Rational> m);

// Throws NotInvertibleError for singular (or non-square) input.
DenseMatrix<Rational> inverse(const DenseMatrix<Rational>& m);

// Basis of {x : m x = 0}, itself brought to reduced echelon form (leading
// coefficient 1, earliest pivot first).
std::vector<std::vector<Rational>> null_space(const DenseMatrix<Rational>& m);

}  // namespace efb::linalg
