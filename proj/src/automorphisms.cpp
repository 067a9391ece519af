#include "efb/automorphisms.hpp"

#include <stdexcept>

#include "efb/exact_linalg.hpp"
#include "efb/generators.hpp"

namespace efb {

Element main_auto(const Element& v) {
  return v.map_basis([](const EfbIndex& x) { return std::pair{x, x.parity()}; });
}

Element reversion_auto(const Element& v) {
  return v.map_basis([](const EfbIndex& x) { return std::pair{EfbIndex(-x.row, -x.col), 1}; });
}

Element conjugation_auto(const Element& v) {
  return v.map_basis([](const EfbIndex& x) { return std::pair{EfbIndex(-x.row, -x.col), x.parity()}; });
}

Element beta_anti(const Element& v) {
  return v.map_basis([](const EfbIndex& x) { return std::pair{EfbIndex(-x.col, -x.row), reversal_sign(x)}; });
}

Element dual_transpose(const Element& v) {
  return v.map_basis([](const EfbIndex& x) { return std::pair{EfbIndex(x.col, x.row), reversal_sign(x)}; });
}

bool is_invertible(const Element& x) {
  try {
    (void)linalg::inverse(to_matrix(x));
    return true;
  } catch (const NotInvertibleError&) {
    return false;
  }
}

Element inverse(const Element& x) { return from_matrix(linalg::inverse(to_matrix(x))); }

InnerAutomorphism::InnerAutomorphism(Element x) : x_(std::move(x)), x_inv_(inverse(x_)) {}

Element inner(const Element& x, const Element& v) {
  if (x.dim() != v.dim()) throw DimensionError("inner automorphism with different m");
  return InnerAutomorphism(x)(v);
}

Element realize_inner(std::span<const Element> images) {
  if (images.empty()) throw InvalidAutomorphismError("no generator images given");
  const int m = images.front().dim();
  const int n = 2 * m;
  if (static_cast<int>(images.size()) != n) {
    throw InvalidAutomorphismError("expected " + std::to_string(n) + " generator images, got " + std::to_string(images.size()));
  }
  for (const auto& img : images) {
    if (img.dim() != m) throw DimensionError("generator images have different m");
  }
  const Element one = identity(m);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Element anti = images[i] * images[j] + images[j] * images[i];
      const Element expected = (i == j) ? Element(one * Rational(i % 2 == 0 ? 2 : -2)) : Element(m);
      if (!(anti == expected)) {
        throw InvalidAutomorphismError("images violate the Clifford relations at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ")");
      }
    }
  }

  // alpha(gamma_A) for every monomial, built alongside gamma_A^{-1}.
  struct Pair {
    Element image;
    Element inv;
  };
  std::vector<Pair> monomials;
  monomials.reserve(std::size_t{1} << n);
  monomials.push_back({one, one});
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    const int top = 63 - std::countl_zero(mask);
    const Pair& base = monomials[mask & ~(1ull << top)];
    // (g_A g_t)^{-1} = g_t^{-1} g_A^{-1} and g_t^{-1} = g_t^2 g_t.
    const Element g = gamma(m, top + 1);
    const Element g_inv = (top % 2 == 0) ? g : Element(-g);
    monomials.push_back({base.image * images[top], g_inv * base.inv});
  }

  // Schur: the averaged intertwiner is zero or invertible. Scan matrix-unit
  // seeds row-major until it is nonzero.
  const std::uint32_t side = 1u << m;
  for (std::uint32_t a = 0; a < side; ++a) {
    for (std::uint32_t b = 0; b < side; ++b) {
      const Element seed = Element::basis(EfbIndex(Signature(m, a), Signature(m, b)));
      Element x(m);
      for (const auto& mono : monomials) x += mono.image * seed * mono.inv;
      if (x.is_zero()) continue;
      if (!is_invertible(x)) {
        throw std::logic_error("averaged intertwiner is nonzero but singular");
      }
      const Rational lead = x.terms().front().second;
      x *= Rational(1 / lead);
      return x;
    }
  }
  throw std::logic_error("every seed produced a zero intertwiner");
}

}  // namespace efb
