#pragma once

#include <optional>
#include <utility>

#include "efb/efb_index.hpp"

namespace efb {

namespace detail {

// Bit p of the result is the xor of the bits of y strictly below p. With the
// most-significant-first slot layout, "below" means "later Witt pair".
inline std::uint32_t xor_of_later_slots(std::uint32_t y) {
  std::uint32_t z = y;
  z ^= z << 1;
  z ^= z << 2;
  z ^= z << 4;
  z ^= z << 8;
  z ^= z << 16;
  return z << 1;
}

inline int parity_sign(std::uint32_t x) { return (std::popcount(x) & 1) ? -1 : 1; }

}  // namespace detail

// Sign in Psi_ab Psi_bd = s(a,b,d) Psi_ad.
//
// Per Witt pair the Cl(1,1) products carry no sign, so the only sign comes
// from moving the odd factors of the right operand past the odd factors of
// the left operand that sit in later slots:
//   s = (-1)^{ sum_{i<j} [b_i != d_i] [a_j != b_j] }.
// Checked against word reduction in the tests.
int sign_s(Signature a, Signature b, Signature d);

inline int sign_s_unchecked(std::uint32_t a, std::uint32_t b, std::uint32_t d) {
  return detail::parity_sign((b ^ d) & detail::xor_of_later_slots(a ^ b));
}

// Product of two basis elements: nothing when x.col != y.row, otherwise the
// index (x.row, y.col) and its sign.
std::optional<std::pair<EfbIndex, int>> efb_basis_product(const EfbIndex& x, const EfbIndex& y);

// Sign carried by the unit matrix E_ab when written in the EFB basis:
// E_ab = t(a,b) Psi_ab. It reproduces the signed Cl(2,2) table and satisfies
// t(a,b) t(b,d) t(a,d) = s(a,b,d).
int table_sign(const EfbIndex& x);

// s'(a,b) in beta(Psi_ab) = s' Psi_{-b,-a} and Psi_ab^T = s' Psi_ba:
// reversing a word with k odd factors costs (-1)^{k(k-1)/2}.
int reversal_sign(const EfbIndex& x);

}  // namespace efb
