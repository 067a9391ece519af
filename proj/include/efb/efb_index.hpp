#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "efb/signature.hpp"

namespace efb {

// Identifies the basis element Psi_ab: a is the h signature (row), b the
// h∘g signature (column, the spinor space).
struct EfbIndex {
  Signature row;
  Signature col;

  EfbIndex() = default;
  EfbIndex(Signature a, Signature b) : row(a), col(b) {
    if (a.dim() != b.dim()) require_same_dim(a, b);
  }

  int dim() const { return row.dim(); }

  Signature h_signature() const { return row; }
  Signature hg_signature() const { return col; }
  Signature g_signature() const { return hadamard(row, col); }

  // Eigenvalue of left multiplication by the volume element.
  int chirality() const { return row.epsilon(); }
  // Parity under the main automorphism.
  int parity() const { return row.epsilon() * col.epsilon(); }

  // Lexicographic (row, column) rank; unique per m.
  std::uint32_t key() const { return (row.bits() << 16) | col.bits(); }

  std::string str() const { return "(" + row.str() + "," + col.str() + ")"; }

  friend bool operator==(const EfbIndex&, const EfbIndex&) = default;
  friend auto operator<=>(const EfbIndex& x, const EfbIndex& y) { return x.key() <=> y.key(); }
};

inline Signature h_signature(const EfbIndex& x) { return x.h_signature(); }
inline Signature g_signature(const EfbIndex& x) { return x.g_signature(); }
inline Signature hg_signature(const EfbIndex& x) { return x.hg_signature(); }
inline int chirality_of_basis(const EfbIndex& x) { return x.chirality(); }
inline int parity_of_basis(const EfbIndex& x) { return x.parity(); }

}  // namespace efb
