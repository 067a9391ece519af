#include <gtest/gtest.h>

#include <random>

#include "efb/errors.hpp"
#include "efb/generators.hpp"
#include "efb/text_format.hpp"
#include "test_support.hpp"

using namespace efb;

namespace {

EfbIndex idx(const char* a, const char* b) { return EfbIndex(Signature::parse(a), Signature::parse(b)); }
Element parse(int m, std::string_view s) { return parse_element(m, s).value; }

}  // namespace

TEST(Parse, GammaExpressions) {
  const ParsedElement e = parse_element(3, "2 * e1 e3 - 1/2 * e2");
  EXPECT_EQ(e.basis, Basis::Gamma);
  EXPECT_EQ(e.value, Rational(2) * gamma(3, 1) * gamma(3, 3) - Rational(1, 2) * gamma(3, 2));
  EXPECT_EQ(parse(2, "e1 e2 e3 e4"), omega(2));
  EXPECT_EQ(parse(2, "e2 e1"), -parse(2, "e1 e2"));
  EXPECT_EQ(parse(2, "3"), Rational(3) * identity(2));
  EXPECT_EQ(parse(2, "2e1"), Rational(2) * gamma(2, 1));
  EXPECT_TRUE(parse(1, "e1 - e1").is_zero());
  EXPECT_TRUE(parse(1, "0").is_zero());
}

TEST(Parse, NullExpressions) {
  const ParsedElement e = parse_element(1, "q1 p1 - 3 * p1");
  EXPECT_EQ(e.basis, Basis::Null);
  EXPECT_EQ(e.value, Element::basis(idx("+", "+")) - Rational(3) * Element::basis(idx("-", "+")));
  EXPECT_EQ(parse(1, "p1 + q1"), gamma(1, 1));
  EXPECT_TRUE(parse(1, "p1 p1").is_zero());
  EXPECT_EQ(parse(2, "q1 p1 q2 p2"), Element::basis(idx("++", "++")));
}

TEST(Parse, WhitespaceAndUnicodeMinus) {
  EXPECT_EQ(parse(2, "  -e1+e2 "), parse(2, "-e1 + e2"));
  EXPECT_EQ(parse(2, "\xE2\x88\x92" "e1"), -gamma(2, 1));
  EXPECT_EQ(parse(2, "1/2*e1"), Rational(1, 2) * gamma(2, 1));
  EXPECT_EQ(parse(2, "-2/4 e1"), Rational(-1, 2) * gamma(2, 1));
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "e", "e0", "e5", "p3", "1/0", "2 *", "e1 +", "+ * e1", "e1 ** e2", "x1", "1/", "e1 e2)"})
    EXPECT_THROW(parse_element(2, bad), ParseError) << "'" << bad << "'";
}

TEST(Format, Gamma) {
  EXPECT_EQ(format_gamma(parse(3, "2 * e1 e3 - 1/2 * e2")), "-1/2 * e2 + 2 * e1 e3");
  EXPECT_EQ(format_gamma(-gamma(1, 1)), "-e1");
  EXPECT_EQ(format_gamma(Element(2)), "0");
  EXPECT_EQ(format_gamma(identity(2)), "1");
  EXPECT_EQ(format_gamma(omega(1)), "e1 e2");
}

TEST(Format, Null) {
  EXPECT_EQ(format_null(Element::basis(idx("+", "+"))), "q1 p1");
  EXPECT_EQ(format_null(Element::basis(idx("+", "+")) - Rational(3) * Element::basis(idx("-", "+"))), "q1 p1 - 3 * p1");
  EXPECT_EQ(format_null(identity(1)), "q1 p1 + p1 q1");
  EXPECT_EQ(format_null(Element(1)), "0");
  EXPECT_EQ(canonical_word_str(idx("-+-", "++-")), "p1 q2 p2 p3 q3");
}

TEST(Format, RoundTrip) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 500; ++t) {
    const int m = 1 + t % 4;
    const Element v = efb::testing::random_element(rng, m, m <= 2 ? 0.5 : 0.1);
    const std::string g = format_gamma(v);
    ASSERT_EQ(parse(m, g), v) << g;
    const std::string n = format_null(v);
    ASSERT_EQ(parse(m, n), v) << n;
    ASSERT_EQ(format_element(v, Basis::Null), n);
  }
}
