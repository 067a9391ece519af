#pragma once

#include <span>
#include <vector>

#include "efb/multivector.hpp"

namespace efb {

// Psi_ab -> eps(a) eps(b) Psi_ab; inner by omega, negates vectors.
Element main_auto(const Element& v);
// Psi_ab -> Psi_{-a,-b}; inner by tau, gamma_i -> gamma_i^{-1}.
Element reversion_auto(const Element& v);
// Psi_ab -> eps(a) eps(b) Psi_{-a,-b}; main after reversion, inner by omega tau.
Element conjugation_auto(const Element& v);
// Antiautomorphism fixing vectors: Psi_ab -> s'(a,b) Psi_{-b,-a}.
Element beta_anti(const Element& v);
// Matrix transpose in the EFB picture: Psi_ab -> s'(a,b) Psi_ba.
Element dual_transpose(const Element& v);

bool is_invertible(const Element& x);
// Throws NotInvertibleError.
Element inverse(const Element& x);

// v -> x v x^{-1} with the inverse computed once.
class InnerAutomorphism {
 public:
  explicit InnerAutomorphism(Element x);

  const Element& element() const { return x_; }
  const Element& element_inverse() const { return x_inv_; }

  Element operator()(const Element& v) const { return x_ * v * x_inv_; }

 private:
  Element x_;
  Element x_inv_;
};

Element inner(const Element& x, const Element& v);

// Given images[i] = alpha(gamma_{i+1}) of an automorphism alpha, returns x
// with x gamma_i x^{-1} = alpha(gamma_i), scaled so that its first nonzero
// coefficient in index order is 1.
//
// Throws InvalidAutomorphismError unless the images satisfy
// {img_i, img_j} = 2 delta_ij (-1)^{i+1}.
Element realize_inner(std::span<const Element> images);

}  // namespace efb
