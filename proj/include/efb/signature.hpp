#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "efb/errors.hpp"

namespace efb {

// EfbIndex packs two signatures into 32 bits.
inline constexpr int kMaxDim = 16;

// Throws DimensionError unless 1 <= m <= kMaxDim.
void check_dim(int m);

// An element of {+1,-1}^m. Entry i (0-based) is stored in bit (m-1-i) with
// +1 -> 0 and -1 -> 1, so bits() is also the row/column index of the
// matrix picture: (+,...,+) is 0 and (-,...,-) is 2^m - 1.
class Signature {
 public:
  Signature() = default;
  Signature(int m, std::uint32_t bits);

  static Signature all_plus(int m) { return Signature(m, 0); }
  // The all -1 signature (often written e-bar).
  static Signature all_minus(int m);
  // Accepts strings over {'+', '-'}; the length is m.
  static Signature parse(std::string_view text);

  int dim() const { return m_; }
  std::uint32_t bits() const { return bits_; }
  std::uint32_t mask() const { return (m_ == 32) ? ~0u : ((1u << m_) - 1u); }

  // +1 or -1.
  int entry(int i) const { return (bits_ & slot_bit(i)) ? -1 : 1; }
  Signature flipped(int i) const { return Signature(m_, bits_ ^ slot_bit(i), Unchecked{}); }
  Signature operator-() const { return Signature(m_, bits_ ^ mask(), Unchecked{}); }

  // Product of entries.
  int epsilon() const { return (std::popcount(bits_) & 1) ? -1 : 1; }

  std::string str() const;

  std::uint32_t slot_bit(int i) const { return 1u << (m_ - 1 - i); }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature& x, const Signature& y) {
    if (auto c = x.m_ <=> y.m_; c != 0) return c;
    return x.bits_ <=> y.bits_;
  }

 private:
  struct Unchecked {};
  Signature(int m, std::uint32_t bits, Unchecked) : bits_(bits), m_(m) {}

  std::uint32_t bits_ = 0;
  int m_ = 0;

  friend Signature hadamard(Signature x, Signature y);
};

// Entrywise product.
Signature hadamard(Signature x, Signature y);

// All 2^m signatures in ascending index order.
std::vector<Signature> all_signatures(int m);

void require_same_dim(const Signature& x, const Signature& y);

}  // namespace efb
