#include <gtest/gtest.h>

#include <random>

#include "efb/errors.hpp"
#include "efb/generators.hpp"
#include "efb/word_oracle.hpp"
#include "test_support.hpp"

using namespace efb;
using namespace efb::oracle;

namespace {

EfbIndex idx(const char* a, const char* b) { return EfbIndex(Signature::parse(a), Signature::parse(b)); }

NullWord random_word(std::mt19937_64& rng, int m, std::size_t len) {
  NullWord w;
  for (std::size_t i = 0; i < len; ++i)
    w.letters.push_back({(rng() & 1) ? LetterKind::P : LetterKind::Q, 1 + static_cast<int>(rng() % m)});
  return w;
}

}  // namespace

TEST(WordOracle, ParseAndPrint) {
  const NullWord w = parse_word("q1 p1 q2");
  ASSERT_EQ(w.letters.size(), 3u);
  EXPECT_EQ(w.letters[0], (NullLetter{LetterKind::Q, 1}));
  EXPECT_EQ(word_str(w.letters), "q1 p1 q2");
  EXPECT_THROW(parse_word("x1"), ParseError);
  EXPECT_THROW(parse_word("p0"), ParseError);
}

TEST(WordOracle, Reductions) {
  // q p q = q
  EXPECT_EQ(reduce(1, parse_word("q1 p1 q1")), Element::basis(idx("+", "-")));
  EXPECT_TRUE(reduce(1, parse_word("p1 p1")).is_zero());
  EXPECT_EQ(reduce(2, parse_word("q1 p1 q2 p2")), Element::basis(idx("++", "++")));
  EXPECT_EQ(reduce(3, NullWord{}), identity(3));
  // p q + q p = 1
  EXPECT_EQ(reduce(2, parse_word("p2 q2")) + reduce(2, parse_word("q2 p2")), identity(2));
  // distinct pairs anticommute
  EXPECT_EQ(reduce(2, parse_word("p2 p1")), -reduce(2, parse_word("p1 p2")));
  EXPECT_THROW(reduce(1, parse_word("p2")), DimensionError);
}

TEST(WordOracle, CanonicalWords) {
  EXPECT_EQ(word_str(canonical_word(idx("+", "+"))), "q1 p1");
  EXPECT_EQ(word_str(canonical_word(idx("+", "-"))), "q1");
  EXPECT_EQ(word_str(canonical_word(idx("-", "+"))), "p1");
  EXPECT_EQ(word_str(canonical_word(idx("-", "-"))), "p1 q1");
  EXPECT_EQ(word_str(canonical_word(idx("+-", "-+"))), "q1 p2");
  for (int m = 1; m <= 3; ++m)
    for (const auto& a : all_signatures(m))
      for (const auto& b : all_signatures(m)) {
        const EfbIndex x(a, b);
        ASSERT_EQ(reduce(m, NullWord{canonical_word(x)}), Element::basis(x));
      }
}

TEST(WordOracle, OracleProductExamples) {
  EXPECT_EQ(oracle_product(idx("+", "-"), idx("-", "+")), Element::basis(idx("+", "+")));
  EXPECT_TRUE(oracle_product(idx("+", "-"), idx("+", "-")).is_zero());
  for (int m = 1; m <= 4; ++m)
    for (const auto& a : all_signatures(m))
      ASSERT_EQ(oracle_product(EfbIndex(a, a), EfbIndex(a, a)), Element::basis(EfbIndex(a, a)));
  EXPECT_THROW(oracle_product(idx("+", "+"), idx("++", "++")), DimensionError);
}

TEST(WordOracle, ProductsHaveAtMostOneUnitTerm) {
  for (int m = 1; m <= 3; ++m)
    for (const auto& a : all_signatures(m))
      for (const auto& b : all_signatures(m))
        for (const auto& c : all_signatures(m))
          for (const auto& d : all_signatures(m)) {
            const Element r = oracle_product(EfbIndex(a, b), EfbIndex(c, d));
            ASSERT_LE(r.size(), 1u);
            ASSERT_EQ(r.is_zero(), b != c);
            if (!r.is_zero()) {
              const Rational& k = r.terms()[0].second;
              ASSERT_TRUE(k == 1 || k == -1);
            }
          }
}

TEST(WordOracle, RewriteRules) {
  // same letter twice vanishes
  EXPECT_TRUE(rewrite_at(parse_word("q1 q1"), 0).empty());
  // distinct pairs swap with a sign
  auto r = rewrite_at(parse_word("p2 q1"), 0);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(word_str(r[0].letters), "q1 p2");
  EXPECT_EQ(r[0].coefficient, -1);
  // p q = 1 - q p
  r = rewrite_at(parse_word("p1 q1"), 0);
  ASSERT_EQ(r.size(), 2u);
}

TEST(WordOracle, ConfluenceSpotCheck) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 400; ++t) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const std::size_t len = 2 + rng() % 11;
    const NullWord w = random_word(rng, m, len);
    const Element direct = reduce(m, w);
    const std::size_t pos = rng() % (len - 1);
    Element rewritten(m);
    for (const auto& piece : rewrite_at(w, pos)) rewritten += reduce(m, piece);
    ASSERT_EQ(direct, rewritten) << word_str(w.letters) << " at " << pos;
  }
}

TEST(WordOracle, ConcatenationIsMultiplicative) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const NullWord x = random_word(rng, m, 1 + rng() % 6);
    const NullWord y = random_word(rng, m, 1 + rng() % 6);
    NullWord xy = x;
    xy.letters.insert(xy.letters.end(), y.letters.begin(), y.letters.end());
    ASSERT_EQ(reduce(m, xy), efb::testing::oracle_multiply(reduce(m, x), reduce(m, y)));
  }
}
