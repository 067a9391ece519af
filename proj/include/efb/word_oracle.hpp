#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "efb/multivector.hpp"

// Brute-force reduction of words in the null letters p_i, q_i. Deliberately
// slow and independent of the sign formulas in efb_core; the tests use it as
// the reference for the fast product.
namespace efb::oracle {

enum class LetterKind { P, Q };

struct NullLetter {
  LetterKind kind;
  int index;  // Witt pair, 1..m

  friend bool operator==(const NullLetter&, const NullLetter&) = default;
  friend auto operator<=>(const NullLetter&, const NullLetter&) = default;
};

struct NullWord {
  std::vector<NullLetter> letters;
  Rational coefficient{1};
};

// "q1 p1 q1" -> letters; the coefficient is 1.
NullWord parse_word(std::string_view text);
std::string word_str(const std::vector<NullLetter>& letters);

// Letter sequence psi_1 ... psi_m of the unsigned basis element Psi_ab.
std::vector<NullLetter> canonical_word(const EfbIndex& x);

// One application of a defining relation at position pos (pos, pos+1):
//   distinct pairs anticommute, p_i p_i = q_i q_i = 0, and
//   x_i y_i = 1 - y_i x_i for {x, y} = {p, q}.
// Returns the resulting signed words (zero, one or two of them).
std::vector<NullWord> rewrite_at(const NullWord& w, std::size_t pos);

// Normal form of the word in the EFB basis. Letters must have index <= m.
Element reduce(int m, const NullWord& w);

// Decodes both indices, concatenates the words and reduces. The result is
// zero or a single basis element with coefficient +-1.
Element oracle_product(const EfbIndex& x, const EfbIndex& y);

}  // namespace efb::oracle
