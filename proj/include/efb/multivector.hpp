#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "efb/efb_core.hpp"
#include "efb/scalar.hpp"

namespace efb {

// Scalar multiplications performed by product() on this thread. Monotone;
// exact when the work runs on a single thread.
std::uint64_t multiplication_count();
void reset_multiplication_count();

namespace detail {
std::uint64_t& multiplication_tally();
}  // namespace detail

// A general algebra element sum_ab xi_ab Psi_ab, stored as a sorted sparse
// term list without zero coefficients. The empty list is the unique zero.
template <class S>
class Multivector {
 public:
  using Scalar = S;
  using Term = std::pair<EfbIndex, S>;

  explicit Multivector(int m) : m_(m) { check_dim(m); }

  // Terms may be unsorted and repeated; they are merged and zeros dropped.
  Multivector(int m, std::vector<Term> terms) : m_(m), terms_(std::move(terms)) {
    check_dim(m);
    for (const auto& [idx, c] : terms_) {
      if (idx.dim() != m_) throw DimensionError("term dimension does not match multivector");
    }
    canonicalize();
  }

  static Multivector basis(const EfbIndex& x, S coef = S(1)) {
    Multivector v(x.dim());
    if (!ScalarTraits<S>::is_zero(coef)) v.terms_.emplace_back(x, std::move(coef));
    return v;
  }

  int dim() const { return m_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const EfbIndex& x) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), x,
                               [](const Term& t, const EfbIndex& k) { return t.first < k; });
    if (it != terms_.end() && it->first == x) return it->second;
    return S(0);
  }

  // Maps every basis element Psi_x to sign * Psi_{f(x)}; f must be a
  // bijection on indices for the result to stay canonical without merging.
  template <class F>
  Multivector map_basis(F&& f) const {
    Multivector out(m_);
    out.terms_.reserve(terms_.size());
    for (const auto& [idx, c] : terms_) {
      auto [image, sign] = f(idx);
      out.terms_.emplace_back(image, sign < 0 ? S(-c) : c);
    }
    out.canonicalize();
    return out;
  }

  Multivector& operator+=(const Multivector& o) { return merge_with(o, 1); }
  Multivector& operator-=(const Multivector& o) { return merge_with(o, -1); }

  Multivector& operator*=(const S& k) {
    if (ScalarTraits<S>::is_zero(k)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= k;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend Multivector operator*(Multivector a, const S& k) { return a *= k; }
  friend Multivector operator*(const S& k, Multivector a) { return a *= k; }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    if (a.m_ != b.m_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].first != b.terms_[i].first) return false;
      if (!(a.terms_[i].second == b.terms_[i].second)) return false;
    }
    return true;
  }

  // Builds from already canonical terms (sorted, unique, nonzero).
  static Multivector from_sorted(int m, std::vector<Term> terms) {
    Multivector v(m);
    v.terms_ = std::move(terms);
    return v;
  }

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().first == t.first) {
        merged.back().second += t.second;
      } else {
        if (!merged.empty() && ScalarTraits<S>::is_zero(merged.back().second)) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && ScalarTraits<S>::is_zero(merged.back().second)) merged.pop_back();
    terms_ = std::move(merged);
  }

  Multivector& merge_with(const Multivector& o, int sign) {
    if (o.m_ != m_) throw DimensionError("multivector dimensions differ");
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first < i->first) {
        out.emplace_back(j->first, sign < 0 ? S(-j->second) : j->second);
        ++j;
      } else {
        S c = sign < 0 ? S(i->second - j->second) : S(i->second + j->second);
        if (!ScalarTraits<S>::is_zero(c)) out.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  int m_;
  std::vector<Term> terms_;
};

// Above this m the product merges rows by sorting instead of a dense
// per-row accumulator.
inline constexpr int kDenseRowDim = 12;

// Clifford product rho_ad = sum_b s(a,b,d) xi_ab zeta_bd over the sparse
// terms. Adds one to the multiplication tally per xi*zeta.
template <class S>
Multivector<S> product(const Multivector<S>& u, const Multivector<S>& v) {
  using Term = typename Multivector<S>::Term;
  if (u.dim() != v.dim()) throw DimensionError("product of multivectors with different m");
  const int m = u.dim();
  const auto ut = u.terms();
  const auto vt = v.terms();

  // Row ranges of v; rows are contiguous because terms are sorted row-major.
  // Up to kDenseRowDim the row starts are tabulated, above it searched.
  std::vector<std::uint32_t> row_start;
  if (m <= kDenseRowDim && !ut.empty()) {
    row_start.assign((std::size_t{1} << m) + 1, 0);
    for (const auto& t : vt) ++row_start[t.first.row.bits() + 1];
    for (std::size_t r = 1; r < row_start.size(); ++r) row_start[r] += row_start[r - 1];
  }
  auto row_range = [&](std::uint32_t row) {
    if (!row_start.empty()) return std::pair{vt.begin() + row_start[row], vt.begin() + row_start[row + 1]};
    auto lo = std::lower_bound(vt.begin(), vt.end(), row,
                               [](const Term& t, std::uint32_t r) { return t.first.row.bits() < r; });
    auto hi = lo;
    while (hi != vt.end() && hi->first.row.bits() == row) ++hi;
    return std::pair{lo, hi};
  };

  std::uint64_t count = 0;
  std::vector<Term> out;
  out.reserve(std::max(ut.size(), vt.size()));
  std::vector<Term> scratch;
  std::vector<S> acc;
  std::vector<char> used;

  for (std::size_t i = 0; i < ut.size();) {
    const std::uint32_t a = ut[i].first.row.bits();
    std::size_t j = i;
    while (j < ut.size() && ut[j].first.row.bits() == a) ++j;

    if (j - i == 1) {
      // Single left term in this row: the output row is already sorted.
      const auto& [x, xi] = ut[i];
      const std::uint32_t b = x.col.bits();
      const std::uint32_t later = detail::xor_of_later_slots(a ^ b);
      auto [lo, hi] = row_range(b);
      count += static_cast<std::uint64_t>(hi - lo);
      for (auto it = lo; it != hi; ++it) {
        const int sign = detail::parity_sign((b ^ it->first.col.bits()) & later);
        S c;
        if constexpr (std::is_floating_point_v<S>) {
          // Branch-free: the sign pattern is data dependent.
          c = static_cast<S>(sign) * (xi * it->second);
        } else {
          c = xi * it->second;
          if (sign < 0) c = -c;
        }
        if (!ScalarTraits<S>::is_zero(c)) {
          out.emplace_back(it->first, std::move(c));
          out.back().first.row = x.row;
        }
      }
    } else if (m <= kDenseRowDim) {
      // Several left terms: accumulate the output row densely by column.
      if (acc.empty()) {
        acc.assign(std::size_t{1} << m, S(0));
        used.assign(std::size_t{1} << m, 0);
      }
      const Signature& row = ut[i].first.row;
      for (std::size_t k = i; k < j; ++k) {
        const auto& [x, xi] = ut[k];
        const std::uint32_t b = x.col.bits();
        auto [lo, hi] = row_range(b);
        for (auto it = lo; it != hi; ++it) {
          const std::uint32_t d = it->first.col.bits();
          ++count;
          if (sign_s_unchecked(a, b, d) < 0) {
            acc[d] -= xi * it->second;
          } else {
            acc[d] += xi * it->second;
          }
          used[d] = 1;
        }
      }
      for (std::uint32_t d = 0; d < acc.size(); ++d) {
        if (!used[d]) continue;
        used[d] = 0;
        if (!ScalarTraits<S>::is_zero(acc[d])) out.emplace_back(EfbIndex(row, Signature(m, d)), acc[d]);
        acc[d] = S(0);
      }
    } else {
      scratch.clear();
      for (std::size_t k = i; k < j; ++k) {
        const auto& [x, xi] = ut[k];
        const std::uint32_t b = x.col.bits();
        auto [lo, hi] = row_range(b);
        for (auto it = lo; it != hi; ++it) {
          S c = xi * it->second;
          ++count;
          if (sign_s_unchecked(a, b, it->first.col.bits()) < 0) c = -c;
          scratch.emplace_back(EfbIndex(x.row, it->first.col), std::move(c));
        }
      }
      std::sort(scratch.begin(), scratch.end(),
                [](const Term& p, const Term& q) { return p.first < q.first; });
      for (std::size_t k = 0; k < scratch.size();) {
        std::size_t l = k + 1;
        S c = std::move(scratch[k].second);
        while (l < scratch.size() && scratch[l].first == scratch[k].first) c += scratch[l++].second;
        if (!ScalarTraits<S>::is_zero(c)) out.emplace_back(scratch[k].first, std::move(c));
        k = l;
      }
    }
    i = j;
  }
  detail::multiplication_tally() += count;
  return Multivector<S>::from_sorted(m, std::move(out));
}

template <class S>
Multivector<S> operator*(const Multivector<S>& u, const Multivector<S>& v) {
  return product(u, v);
}

// Coefficient-wise approximate comparison for the floating-point mode.
template <class S>
bool approx_equal(const Multivector<S>& u, const Multivector<S>& v) {
  if (u.dim() != v.dim()) return false;
  const Multivector<S> d = u - v;
  for (const auto& [idx, c] : d.terms()) {
    if (!ScalarTraits<S>::equal(u.coefficient(idx), v.coefficient(idx))) return false;
  }
  return true;
}

template <class To, class From>
Multivector<To> multivector_cast(const Multivector<From>& v) {
  std::vector<typename Multivector<To>::Term> terms;
  terms.reserve(v.size());
  for (const auto& [idx, c] : v.terms()) terms.emplace_back(idx, scalar_cast<To>(c));
  return Multivector<To>(v.dim(), std::move(terms));
}

using Element = Multivector<Rational>;

std::string debug_string(const Element& v);

}  // namespace efb
