#include "efb/generators.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

namespace efb {

namespace {

void check_generator(int m, int i) {
  check_dim(m);
  if (i < 1 || i > 2 * m) throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." + std::to_string(2 * m));
}

void check_pair(int m, int i) {
  check_dim(m);
  if (i < 1 || i > m) throw std::out_of_range("Witt index " + std::to_string(i) + " outside 1.." + std::to_string(m));
}

// Sum of Psi_{a, a with slot k flipped} over a with a_k = required_h. For
// h = -1 this is p_k (odd factor p_k, every other factor a unit idempotent),
// for h = +1 it is q_k.
Element null_vector(int m, int k, int required_h, const Rational& coef) {
  std::vector<Element::Term> terms;
  for (const auto& a : all_signatures(m)) {
    if (a.entry(k - 1) != required_h) continue;
    terms.emplace_back(EfbIndex(a, a.flipped(k - 1)), coef);
  }
  return Element(m, std::move(terms));
}

std::uint64_t generator_mask(int m) { return (m == 32) ? ~0ull : ((1ull << (2 * m)) - 1); }

int monomial_inverse_sign(std::uint64_t mask) {
  const int k = std::popcount(mask);
  const int negatives = std::popcount(mask & 0xAAAAAAAAAAAAAAAAull);  // gamma_2, gamma_4, ...
  return (((k * (k - 1) / 2) + negatives) & 1) ? -1 : 1;
}

std::vector<int> mask_indices(std::uint64_t mask) {
  std::vector<int> idx;
  for (int i = 0; i < 64; ++i) {
    if (mask & (1ull << i)) idx.push_back(i + 1);
  }
  return idx;
}

}  // namespace

Element witt_p(int m, int i) {
  check_pair(m, i);
  return null_vector(m, i, -1, Rational(1));
}

Element witt_q(int m, int i) {
  check_pair(m, i);
  return null_vector(m, i, 1, Rational(1));
}

Element gamma(int m, int i) {
  check_generator(m, i);
  const int k = (i + 1) / 2;
  const Rational q_coef = (i % 2 == 1) ? Rational(1) : Rational(-1);
  return null_vector(m, k, -1, Rational(1)) + null_vector(m, k, 1, q_coef);
}

Element identity(int m) {
  std::vector<Element::Term> terms;
  for (const auto& a : all_signatures(m)) terms.emplace_back(EfbIndex(a, a), Rational(1));
  return Element(m, std::move(terms));
}

Element omega(int m) {
  std::vector<Element::Term> terms;
  for (const auto& a : all_signatures(m)) terms.emplace_back(EfbIndex(a, a), Rational(a.epsilon()));
  return Element(m, std::move(terms));
}

Element tau(int m) {
  check_dim(m);
  const Rational s = (m % 2 == 1) ? Rational(1) : Rational(-1);
  Element t = identity(m);
  for (int i = 1; i <= m; ++i) t = t * (witt_p(m, i) + s * witt_q(m, i));
  return t;
}

Element omega_tau(int m) {
  check_dim(m);
  const Rational s = (m % 2 == 1) ? Rational(1) : Rational(-1);
  Element t = identity(m);
  for (int i = 1; i <= m; ++i) t = t * (witt_p(m, i) - s * witt_q(m, i));
  return (m % 2 == 1) ? Element(-t) : t;
}

Element gamma_monomial(int m, std::uint64_t mask) {
  check_dim(m);
  if (mask & ~generator_mask(m)) throw PreconditionError("gamma monomial mask exceeds 2m generators");
  Element out = identity(m);
  for (int i : mask_indices(mask)) out = out * gamma(m, i);
  return out;
}

Element gamma_monomial_inverse(int m, std::uint64_t mask) {
  Element g = gamma_monomial(m, mask);
  return monomial_inverse_sign(mask) < 0 ? Element(-g) : g;
}

Element from_gamma(int m, std::span<const GammaMonomial> expr) {
  check_dim(m);
  Element out(m);
  for (const auto& mono : expr) {
    if (mono.mask & ~generator_mask(m)) throw PreconditionError("gamma monomial mask exceeds 2m generators");
    out += gamma_monomial(m, mono.mask) * mono.coef;
  }
  return out;
}

Rational trace_of_product(const Element& x, const Element& y) {
  if (x.dim() != y.dim()) throw DimensionError("trace of product with different m");
  Rational t(0);
  for (const auto& [idx, c] : x.terms()) {
    const Rational d = y.coefficient(EfbIndex(idx.col, idx.row));
    if (sgn(d) == 0) continue;
    const Rational prod = c * d;
    t += sign_s(idx.row, idx.col, idx.row) < 0 ? Rational(-prod) : prod;
  }
  return t;
}

std::vector<GammaMonomial> to_gamma(const Element& v) {
  // Coefficient of gamma_A is trace(gamma_A^{-1} v) / 2^m since every
  // non-scalar monomial is traceless.
  const int m = v.dim();
  const Rational scale(1, mpz_class(1) << m);
  std::vector<GammaMonomial> out;
  if (v.is_zero()) return out;

  std::function<void(std::uint64_t, int, const Element&)> visit =
      [&](std::uint64_t mask, int next, const Element& mono) {
        const Rational tr = trace_of_product(mono, v);
        if (sgn(tr) != 0) {
          Rational c = tr * scale;
          if (monomial_inverse_sign(mask) < 0) c = -c;
          out.push_back({mask, c});
        }
        for (int i = next; i <= 2 * m; ++i) visit(mask | (1ull << (i - 1)), i + 1, mono * gamma(m, i));
      };
  visit(0, 1, identity(m));

  std::sort(out.begin(), out.end(), [](const GammaMonomial& x, const GammaMonomial& y) {
    const int gx = std::popcount(x.mask);
    const int gy = std::popcount(y.mask);
    if (gx != gy) return gx < gy;
    return mask_indices(x.mask) < mask_indices(y.mask);
  });
  return out;
}

}  // namespace efb
