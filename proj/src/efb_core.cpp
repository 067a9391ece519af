#include "efb/efb_core.hpp"

#include "efb/multivector.hpp"

namespace efb {

int sign_s(Signature a, Signature b, Signature d) {
  require_same_dim(a, b);
  require_same_dim(b, d);
  return sign_s_unchecked(a.bits(), b.bits(), d.bits());
}

std::optional<std::pair<EfbIndex, int>> efb_basis_product(const EfbIndex& x, const EfbIndex& y) {
  if (x.dim() != y.dim()) throw DimensionError("basis product of indices with different m");
  if (x.col != y.row) return std::nullopt;
  return std::pair{EfbIndex(x.row, y.col), sign_s(x.row, x.col, y.col)};
}

int table_sign(const EfbIndex& x) {
  const std::uint32_t a = x.row.bits();
  const std::uint32_t odd = a ^ x.col.bits();
  return detail::parity_sign(odd & detail::xor_of_later_slots(a));
}

int reversal_sign(const EfbIndex& x) {
  const int k = std::popcount(x.row.bits() ^ x.col.bits());
  return ((k * (k - 1) / 2) & 1) ? -1 : 1;
}

namespace detail {
std::uint64_t& multiplication_tally() {
  thread_local std::uint64_t tally = 0;
  return tally;
}
}  // namespace detail

std::uint64_t multiplication_count() { return detail::multiplication_tally(); }
void reset_multiplication_count() { detail::multiplication_tally() = 0; }

std::string debug_string(const Element& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [idx, c] : v.terms()) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*Psi" + idx.str();
  }
  return s;
}

}  // namespace efb
