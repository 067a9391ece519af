#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "efb/dense_matrix.hpp"
#include "efb/multivector.hpp"

namespace efb::bench {

struct OpCounts {
  std::uint64_t efb = 0;
  std::uint64_t dense = 0;
};

// Dense matrix-vector and matrix-matrix products that report one scalar
// multiplication per inner-product step, zeros included.
std::vector<double> dense_matvec(const DenseMatrix<double>& M, std::span<const double> x, std::uint64_t& count);
DenseMatrix<double> dense_matmul(const DenseMatrix<double>& A, const DenseMatrix<double>& B, std::uint64_t& count);

// A spinor in S_ebar with every coefficient nonzero.
Multivector<double> dense_spinor(int m);
// An element with all 2^{2m} coefficients nonzero.
Multivector<double> dense_element(int m, double offset);

// gamma_i times a dense spinor: sparse product vs matrix-vector product.
OpCounts count_vector_times_spinor(int m, int i);
// Product of two full elements: sparse product vs matrix-matrix product.
OpCounts count_general_product(int m);

struct BenchRow {
  int m = 0;
  OpCounts vector_spinor;
  // Only filled for m <= kGeneralCountMaxDim.
  bool has_general = false;
  OpCounts general;
  double efb_median_ns = 0;
  double dense_median_ns = 0;

  double count_ratio() const { return static_cast<double>(vector_spinor.dense) / static_cast<double>(vector_spinor.efb); }
  double wall_ratio() const { return efb_median_ns > 0 ? dense_median_ns / efb_median_ns : 0.0; }
  // efb = 2^m, dense = 2^{2m}.
  bool counts_match_claim() const;
};

inline constexpr int kMinBenchDim = 2;
inline constexpr int kMaxBenchDim = 10;
inline constexpr int kGeneralCountMaxDim = 6;

// Throws std::out_of_range for m outside [2, 10] or trials < 1.
BenchRow run_one(int m, int trials);
std::vector<BenchRow> run(std::span<const int> ms, int trials);

}  // namespace efb::bench
