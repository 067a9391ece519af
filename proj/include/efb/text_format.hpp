#pragma once

#include <string>
#include <string_view>

#include "efb/multivector.hpp"

namespace efb {

// Which token family an expression was written in; serialization answers in
// the same family.
enum class Basis { Gamma, Null };

struct ParsedElement {
  Element value;
  Basis basis;
};

// Grammar: a sum of terms joined by '+' / '-'; a term is
//   [coef ['*']] FACTORS   or   coef
// where coef is an integer or a/b and FACTORS are e<i> (generators) or
// p<i> / q<i> (null vectors). Whitespace is insignificant between tokens;
// the Unicode minus sign is accepted. Throws ParseError.
ParsedElement parse_element(int m, std::string_view text);

// Unsigned canonical word of Psi_ab, e.g. "q1 p1 q2".
std::string canonical_word_str(const EfbIndex& x);

// "2 * e1 e3 - 1/2 * e2", ascending (grade, indices); "0" for zero.
std::string format_gamma(const Element& v);
// Sum of canonical words in index order, e.g. "q1 p1 - 3 * p1".
std::string format_null(const Element& v);
std::string format_element(const Element& v, Basis basis);

}  // namespace efb
