#include "efb/spinor_spaces.hpp"

#include "efb/automorphisms.hpp"
#include "efb/exact_linalg.hpp"
#include "efb/generators.hpp"

namespace efb {

namespace {

std::size_t coordinate(const EfbIndex& x) {
  return (static_cast<std::size_t>(x.row.bits()) << x.dim()) | x.col.bits();
}

EfbIndex index_of(int m, std::size_t coord) {
  const std::uint32_t mask = (1u << m) - 1u;
  return EfbIndex(Signature(m, static_cast<std::uint32_t>(coord >> m)), Signature(m, static_cast<std::uint32_t>(coord & mask)));
}

}  // namespace

bool SpinorSpace::contains(const Element& v) const {
  if (v.dim() != dim()) return false;
  for (const auto& [idx, c] : v.terms()) {
    if (idx.col != column) return false;
  }
  return true;
}

SpinorSpace spinor_space(Signature b) {
  SpinorSpace s{b, {}};
  for (const auto& a : all_signatures(b.dim())) s.basis.emplace_back(a, b);
  return s;
}

Element primitive_idempotent(Signature a) { return Element::basis(EfbIndex(a, a)); }

Chirality chirality(const Element& phi) {
  if (phi.is_zero()) return Chirality::Zero;
  const int first = phi.terms().front().first.chirality();
  for (const auto& [idx, c] : phi.terms()) {
    if (idx.chirality() != first) return Chirality::Mixed;
  }
  return first > 0 ? Chirality::Plus : Chirality::Minus;
}

std::string to_string(Chirality c) {
  switch (c) {
    case Chirality::Plus: return "+1";
    case Chirality::Minus: return "-1";
    case Chirality::Mixed: return "mixed";
    case Chirality::Zero: return "zero";
  }
  return "?";
}

std::string to_string(ChiralityFactor c) {
  switch (c) {
    case ChiralityFactor::Preserve: return "+1";
    case ChiralityFactor::Flip: return "-1";
    case ChiralityFactor::Mixed: return "mixed";
  }
  return "?";
}

Subspace Subspace::span(int m, std::span<const Element> vectors) {
  check_dim(m);
  const std::size_t n = std::size_t{1} << (2 * m);
  Subspace s;
  s.m_ = m;
  if (vectors.empty()) return s;
  DenseMatrix<Rational> mat(vectors.size(), n);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].dim() != m) throw DimensionError("span of elements with different m");
    for (const auto& [idx, c] : vectors[r].terms()) mat(r, coordinate(idx)) = c;
  }
  const auto e = linalg::rref(std::move(mat));
  for (std::size_t r = 0; r < e.rank(); ++r) {
    std::vector<Element::Term> terms;
    for (std::size_t c = e.pivots[r]; c < n; ++c) {
      if (sgn(e.matrix(r, c)) != 0) terms.emplace_back(index_of(m, c), e.matrix(r, c));
    }
    s.rows_.push_back(Element(m, std::move(terms)));
  }
  return s;
}

Subspace Subspace::of(const SpinorSpace& sp) {
  std::vector<Element> vs;
  for (const auto& idx : sp.basis) vs.push_back(Element::basis(idx));
  return span(sp.dim(), vs);
}

bool StabilizerReport::stabilizes_all() const {
  if (!space_map) return false;
  for (std::size_t b = 0; b < space_map->size(); ++b) {
    if ((*space_map)[b].bits() != b) return false;
  }
  return true;
}

bool StabilizerReport::is_negation() const {
  if (!space_map) return false;
  for (std::size_t b = 0; b < space_map->size(); ++b) {
    const Signature& img = (*space_map)[b];
    if (img.bits() != (~static_cast<std::uint32_t>(b) & img.mask())) return false;
  }
  return true;
}

StabilizerReport classify_stabilizer(const Element& x) {
  const int m = x.dim();
  const InnerAutomorphism conj(x);
  StabilizerReport rep{x, std::nullopt, ChiralityFactor::Mixed, {}, {}};

  std::vector<Signature> map;
  bool is_permutation = true;
  std::vector<bool> hit(std::size_t{1} << m, false);
  int factor = 0;  // 0 = unset, 2 = mixed

  for (const auto& b : all_signatures(m)) {
    const SpinorSpace sb = spinor_space(b);
    std::vector<Element> conjugated;
    std::vector<Element> right;
    for (const auto& idx : sb.basis) {
      const Element psi = Element::basis(idx);
      Element img = conj(psi);
      const Chirality ch = chirality(img);
      const int f = ch == Chirality::Plus ? idx.chirality() : ch == Chirality::Minus ? -idx.chirality() : 2;
      if (factor == 0) {
        factor = f;
      } else if (factor != f) {
        factor = 2;
      }
      conjugated.push_back(std::move(img));
      right.push_back(psi * conj.element_inverse());
    }
    const Subspace image = Subspace::span(m, conjugated);
    const Subspace own = Subspace::of(sb);
    rep.conjugation_stable.push_back(image == own);
    rep.right_stable.push_back(Subspace::span(m, right) == own);

    // Candidate label: the column of the leading echelon term.
    std::optional<Signature> target;
    if (image.rank() > 0) target = image.echelon_basis().front().terms().front().first.col;
    if (target && image == Subspace::of(spinor_space(*target)) && !hit[target->bits()]) {
      hit[target->bits()] = true;
      map.push_back(*target);
    } else {
      is_permutation = false;
    }
  }
  if (is_permutation) rep.space_map = std::move(map);
  rep.chirality_factor = factor == 1 ? ChiralityFactor::Preserve : factor == -1 ? ChiralityFactor::Flip : ChiralityFactor::Mixed;
  return rep;
}

bool stabilizes(const Element& x, Signature b) {
  if (x.dim() != b.dim()) throw DimensionError("element and signature have different m");
  const InnerAutomorphism conj(x);
  const SpinorSpace sb = spinor_space(b);
  std::vector<Element> imgs;
  for (const auto& idx : sb.basis) imgs.push_back(conj(Element::basis(idx)));
  return Subspace::span(b.dim(), imgs) == Subspace::of(sb);
}

bool stabilizer_subgroup_check(std::span<const Element> xs, Signature b) {
  std::vector<Element> inverses;
  for (const auto& x : xs) {
    if (!stabilizes(x, b)) {
      throw PreconditionError("input does not stabilize S_" + b.str() + ": " + debug_string(x));
    }
    inverses.push_back(inverse(x));
  }
  for (const auto& xi : inverses) {
    if (!stabilizes(xi, b)) return false;
  }
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      if (!stabilizes(x * y, b)) return false;
    }
  }
  return true;
}

std::optional<NullDecomposition> decompose_grade_one(const Element& v) {
  const int m = v.dim();
  NullDecomposition d;
  Element rebuilt(m);
  for (int k = 1; k <= m; ++k) {
    // p_k contains Psi_{a, a'} with a = (+..-..+) (minus in slot k) and
    // a' = all plus; q_k contains the transposed position.
    const Signature minus_k = Signature::all_plus(m).flipped(k - 1);
    const Signature plus = Signature::all_plus(m);
    d.p_coef.push_back(v.coefficient(EfbIndex(minus_k, plus)));
    d.q_coef.push_back(v.coefficient(EfbIndex(plus, minus_k)));
    rebuilt += witt_p(m, k) * d.p_coef.back() + witt_q(m, k) * d.q_coef.back();
  }
  if (!(rebuilt == v)) return std::nullopt;
  return d;
}

std::vector<Element> solve_weyl(const Element& v, Signature b) {
  const int m = v.dim();
  if (b.dim() != m) throw DimensionError("element and signature have different m");
  if (!decompose_grade_one(v)) throw PreconditionError("solve_weyl expects a grade-1 element");

  // Column a of L holds the coefficients of v Psi_{a b} along Psi_{a' b}.
  const std::size_t side = std::size_t{1} << m;
  DenseMatrix<Rational> L(side, side);
  for (std::uint32_t a = 0; a < side; ++a) {
    const Element img = v * Element::basis(EfbIndex(Signature(m, a), b));
    for (const auto& [idx, c] : img.terms()) L(idx.row.bits(), a) = c;
  }
  std::vector<Element> out;
  for (const auto& vec : linalg::null_space(L)) {
    std::vector<Element::Term> terms;
    for (std::uint32_t a = 0; a < side; ++a) {
      if (sgn(vec[a]) != 0) terms.emplace_back(EfbIndex(Signature(m, a), b), vec[a]);
    }
    out.emplace_back(m, std::move(terms));
  }
  return out;
}

Element sibling_spinor(const Element& phi, Signature from_b, Signature to_b) {
  require_same_dim(from_b, to_b);
  if (phi.dim() != from_b.dim()) throw DimensionError("element and signature have different m");
  if (!spinor_space(from_b).contains(phi)) {
    throw PreconditionError("element is not contained in S_" + from_b.str());
  }
  // Right multiplication by the matrix unit E_{from,to}: the coefficient
  // vector is copied in the matrix picture, where column moves are unsigned.
  return phi.map_basis([&](const EfbIndex& x) {
    const EfbIndex y(x.row, to_b);
    return std::pair{y, table_sign(x) * table_sign(y)};
  });
}

}  // namespace efb
