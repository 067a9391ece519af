#include "efb/signature.hpp"

#include "efb/efb_index.hpp"

namespace efb {

void check_dim(int m) {
  if (m < 1 || m > kMaxDim) {
    throw DimensionError("dimension m=" + std::to_string(m) + " outside 1.." + std::to_string(kMaxDim));
  }
}

Signature::Signature(int m, std::uint32_t bits) : bits_(bits), m_(m) {
  check_dim(m);
  if (bits & ~mask()) throw DimensionError("signature bits exceed dimension");
}

Signature Signature::all_minus(int m) {
  check_dim(m);
  return Signature(m, (1u << m) - 1u);
}

Signature Signature::parse(std::string_view text) {
  const int m = static_cast<int>(text.size());
  check_dim(m);
  std::uint32_t bits = 0;
  for (int i = 0; i < m; ++i) {
    bits <<= 1;
    if (text[i] == '-') {
      bits |= 1u;
    } else if (text[i] != '+') {
      throw ParseError("signature must consist of '+' and '-': " + std::string(text));
    }
  }
  return Signature(m, bits);
}

std::string Signature::str() const {
  std::string s(m_, '+');
  for (int i = 0; i < m_; ++i) {
    if (entry(i) < 0) s[i] = '-';
  }
  return s;
}

void require_same_dim(const Signature& x, const Signature& y) {
  if (x.dim() != y.dim()) throw DimensionError("signatures have different dimensions");
}

Signature hadamard(Signature x, Signature y) {
  require_same_dim(x, y);
  return Signature(x.m_, x.bits_ ^ y.bits_, Signature::Unchecked{});
}

std::vector<Signature> all_signatures(int m) {
  check_dim(m);
  std::vector<Signature> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t b = 0; b < (1u << m); ++b) out.emplace_back(m, b);
  return out;
}

}  // namespace efb
