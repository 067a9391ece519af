#include "efb/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "efb/generators.hpp"

namespace efb::bench {

namespace {

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

// Repetitions per timing sample, so that one sample covers ~2^20 dense
// multiplications.
int reps_for(int m) { return std::max(1, 1 << std::max(0, 20 - 2 * m)); }

volatile double g_sink = 0;

}  // namespace

std::vector<double> dense_matvec(const DenseMatrix<double>& M, std::span<const double> x, std::uint64_t& count) {
  const std::size_t n = M.rows();
  std::vector<double> y(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < M.cols(); ++c) s += M(r, c) * x[c];
    y[r] = s;
  }
  count += static_cast<std::uint64_t>(n) * M.cols();
  return y;
}

DenseMatrix<double> dense_matmul(const DenseMatrix<double>& A, const DenseMatrix<double>& B, std::uint64_t& count) {
  DenseMatrix<double> C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const double a = A(i, k);
      for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += a * B(k, j);
    }
  count += static_cast<std::uint64_t>(A.rows()) * A.cols() * B.cols();
  return C;
}

Multivector<double> dense_spinor(int m) {
  const Signature ebar = Signature::all_minus(m);
  std::vector<Multivector<double>::Term> terms;
  for (const auto& a : all_signatures(m)) terms.emplace_back(EfbIndex(a, ebar), 1.0 + 0.5 * a.bits());
  return Multivector<double>(m, std::move(terms));
}

Multivector<double> dense_element(int m, double offset) {
  std::vector<Multivector<double>::Term> terms;
  for (const auto& a : all_signatures(m))
    for (const auto& b : all_signatures(m)) terms.emplace_back(EfbIndex(a, b), offset + a.bits() + 0.25 * b.bits());
  return Multivector<double>(m, std::move(terms));
}

OpCounts count_vector_times_spinor(int m, int i) {
  const auto g = multivector_cast<double>(gamma(m, i));
  const auto phi = dense_spinor(m);
  OpCounts counts;
  reset_multiplication_count();
  (void)product(g, phi);
  counts.efb = multiplication_count();

  const auto M = to_matrix(g);
  const auto phi_m = to_matrix(phi);
  std::vector<double> x(M.cols());
  for (std::size_t r = 0; r < x.size(); ++r) x[r] = phi_m(r, M.cols() - 1);
  (void)dense_matvec(M, x, counts.dense);
  return counts;
}

OpCounts count_general_product(int m) {
  const auto u = dense_element(m, 1.0);
  const auto v = dense_element(m, 2.0);
  OpCounts counts;
  reset_multiplication_count();
  (void)product(u, v);
  counts.efb = multiplication_count();
  (void)dense_matmul(to_matrix(u), to_matrix(v), counts.dense);
  return counts;
}

bool BenchRow::counts_match_claim() const {
  const std::uint64_t side = std::uint64_t{1} << m;
  return vector_spinor.efb == side && vector_spinor.dense == side * side && vector_spinor.dense == side * vector_spinor.efb;
}

BenchRow run_one(int m, int trials) {
  if (m < kMinBenchDim || m > kMaxBenchDim) {
    throw std::out_of_range("bench m=" + std::to_string(m) + " outside " + std::to_string(kMinBenchDim) + ".." +
                            std::to_string(kMaxBenchDim));
  }
  if (trials < 1) throw std::out_of_range("trials must be >= 1");

  BenchRow row;
  row.m = m;
  row.vector_spinor = count_vector_times_spinor(m, 1);
  if (m <= kGeneralCountMaxDim) {
    row.has_general = true;
    row.general = count_general_product(m);
  }

  const auto g = multivector_cast<double>(gamma(m, 1));
  const auto phi = dense_spinor(m);
  const auto M = to_matrix(g);
  std::vector<double> x(M.cols());
  const auto phi_m = to_matrix(phi);
  for (std::size_t r = 0; r < x.size(); ++r) x[r] = phi_m(r, M.cols() - 1);

  const int reps = reps_for(m);
  std::vector<double> efb_ns;
  std::vector<double> dense_ns;
  using clock = std::chrono::steady_clock;
  for (int t = 0; t < trials; ++t) {
    auto t0 = clock::now();
    for (int r = 0; r < reps; ++r) {
      const auto y = product(g, phi);
      g_sink = g_sink + y.terms().front().second;
    }
    auto t1 = clock::now();
    std::uint64_t ignored = 0;
    for (int r = 0; r < reps; ++r) {
      const auto y = dense_matvec(M, x, ignored);
      g_sink = g_sink + y.front();
    }
    auto t2 = clock::now();
    efb_ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() / reps);
    dense_ns.push_back(std::chrono::duration<double, std::nano>(t2 - t1).count() / reps);
  }
  row.efb_median_ns = median(efb_ns);
  row.dense_median_ns = median(dense_ns);
  return row;
}

std::vector<BenchRow> run(std::span<const int> ms, int trials) {
  std::vector<BenchRow> rows;
  for (int m : ms) rows.push_back(run_one(m, trials));
  return rows;
}

}  // namespace efb::bench
