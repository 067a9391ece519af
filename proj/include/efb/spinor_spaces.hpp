#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "efb/multivector.hpp"

namespace efb {

// The minimal left ideal S_b: all Psi_ab with fixed column b.
struct SpinorSpace {
  Signature column;
  std::vector<EfbIndex> basis;  // ascending row

  int dim() const { return column.dim(); }
  bool contains(const Element& v) const;
};

SpinorSpace spinor_space(Signature b);
// Psi_aa; squares to itself and has trace 1.
Element primitive_idempotent(Signature a);

enum class Chirality { Plus, Minus, Mixed, Zero };

// Eigenvalue of left multiplication by omega when uniform over the terms.
Chirality chirality(const Element& phi);
std::string to_string(Chirality c);

// Exact linear span of a set of elements, held in reduced echelon form over
// the index-ordered coordinates. Equality compares the echelon forms.
class Subspace {
 public:
  static Subspace span(int m, std::span<const Element> vectors);
  static Subspace of(const SpinorSpace& s);

  int dim() const { return m_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Element>& echelon_basis() const { return rows_; }

  friend bool operator==(const Subspace& x, const Subspace& y) { return x.m_ == y.m_ && x.rows_ == y.rows_; }

 private:
  int m_ = 0;
  std::vector<Element> rows_;
};

// +1 / -1 when conjugation scales the chirality of every basis element by
// that factor; Mixed otherwise.
enum class ChiralityFactor { Preserve, Flip, Mixed };
std::string to_string(ChiralityFactor c);

struct StabilizerReport {
  Element x;
  // space_map[b.bits()] = label of x S_b x^{-1}, when every image is a
  // spinor space.
  std::optional<std::vector<Signature>> space_map;
  ChiralityFactor chirality_factor = ChiralityFactor::Mixed;
  // Per column: x S_b x^{-1} == S_b, and S_b x^{-1} == S_b.
  std::vector<bool> conjugation_stable;
  std::vector<bool> right_stable;

  bool stabilizes_all() const;
  // space_map is b -> -b.
  bool is_negation() const;
  // Both stability tests agree for every column.
  bool equivalence_holds() const { return conjugation_stable == right_stable; }
};

// Throws NotInvertibleError for singular x.
StabilizerReport classify_stabilizer(const Element& x);

// x S_b x^{-1} == S_b. Throws NotInvertibleError.
bool stabilizes(const Element& x, Signature b);

// Each input must stabilize S_b (PreconditionError otherwise); returns true
// when every pairwise product and every inverse stabilizes S_b as well.
bool stabilizer_subgroup_check(std::span<const Element> xs, Signature b);

// Exact basis of {phi in S_b : v phi = 0} for v in the span of the p_i, q_i,
// in reduced echelon form. Throws PreconditionError if v is not grade 1.
std::vector<Element> solve_weyl(const Element& v, Signature b);

// Same coefficient vector, moved from column from_b to column to_b, with the
// coordinates read in the matrix picture (phi E_{from,to}). Plain Psi
// coefficients would not do: v Psi_ab carries s(c,a,b), which depends on b.
Element sibling_spinor(const Element& phi, Signature from_b, Signature to_b);

// Decomposes a grade-1 element as sum alpha_i p_i + beta_i q_i; nullopt if v
// is not of that form.
struct NullDecomposition {
  std::vector<Rational> p_coef;
  std::vector<Rational> q_coef;
};
std::optional<NullDecomposition> decompose_grade_one(const Element& v);

}  // namespace efb
