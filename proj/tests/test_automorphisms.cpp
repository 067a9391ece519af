#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "efb/automorphisms.hpp"
#include "efb/errors.hpp"
#include "efb/generators.hpp"
#include "efb/word_oracle.hpp"
#include "test_support.hpp"

using namespace efb;

namespace {

EfbIndex idx(const char* a, const char* b) { return EfbIndex(Signature::parse(a), Signature::parse(b)); }

// mu = x++ qp + x-- pq + x-+ p + x+- q with distinct symbolic-ish weights.
Element cl11_generic() {
  return Rational(2) * Element::basis(idx("+", "+")) + Rational(3) * Element::basis(idx("-", "-")) +
         Rational(5) * Element::basis(idx("-", "+")) + Rational(7) * Element::basis(idx("+", "-"));
}

Element cl11_with(int pp, int mm, int mp, int pm) {
  return Rational(pp) * Element::basis(idx("+", "+")) + Rational(mm) * Element::basis(idx("-", "-")) +
         Rational(mp) * Element::basis(idx("-", "+")) + Rational(pm) * Element::basis(idx("+", "-"));
}

using Map = std::function<Element(const Element&)>;

}  // namespace

TEST(MainAuto, CliffordOneOneRow) {
  EXPECT_EQ(main_auto(cl11_generic()), cl11_with(2, 3, -5, -7));
  EXPECT_EQ(inner(omega(1), cl11_generic()), cl11_with(2, 3, -5, -7));
}

TEST(MainAuto, NegatesVectorsAndIsInvolutive) {
  std::mt19937_64 rng(41);
  for (int m = 1; m <= 4; ++m) {
    for (int i = 1; i <= 2 * m; ++i) ASSERT_EQ(main_auto(gamma(m, i)), -gamma(m, i));
    const Element v = efb::testing::random_element(rng, m, 0.3);
    ASSERT_EQ(main_auto(main_auto(v)), v);
    if (m <= 3) ASSERT_EQ(main_auto(v), inner(omega(m), v));
  }
}

TEST(ReversionAuto, CliffordOneOneRow) {
  EXPECT_EQ(reversion_auto(cl11_generic()), cl11_with(3, 2, 7, 5));
  EXPECT_EQ(inner(tau(1), cl11_generic()), cl11_with(3, 2, 7, 5));
}

TEST(ReversionAuto, InvertsGenerators) {
  std::mt19937_64 rng(42);
  for (int m = 1; m <= 4; ++m) {
    for (int i = 1; i <= 2 * m; ++i) {
      const Element g = gamma(m, i);
      ASSERT_EQ(reversion_auto(g), g * g * g);
    }
    const Element v = efb::testing::random_element(rng, m, 0.3);
    ASSERT_EQ(reversion_auto(reversion_auto(v)), v);
  }
}

TEST(ReversionAuto, InnerByTauExhaustive) {
  for (int m = 1; m <= 3; ++m) {
    const InnerAutomorphism t(tau(m));
    for (const auto& a : all_signatures(m))
      for (const auto& b : all_signatures(m))
        ASSERT_EQ(t(Element::basis(EfbIndex(a, b))), Element::basis(EfbIndex(-a, -b)));
  }
}

TEST(ConjugationAuto, CliffordOneOneRow) {
  EXPECT_EQ(conjugation_auto(cl11_generic()), cl11_with(3, 2, -7, -5));
  EXPECT_EQ(inner(omega_tau(1), cl11_generic()), cl11_with(3, 2, -7, -5));
}

TEST(ConjugationAuto, Properties) {
  std::mt19937_64 rng(43);
  for (int m = 1; m <= 4; ++m) {
    EXPECT_EQ(conjugation_auto(gamma(m, 1)), -gamma(m, 1));
    for (int i = 1; i <= 2 * m; ++i) ASSERT_EQ(conjugation_auto(gamma(m, i)), -inverse(gamma(m, i)));
    const Element v = efb::testing::random_element(rng, m, 0.3);
    ASSERT_EQ(conjugation_auto(conjugation_auto(v)), v);
    ASSERT_EQ(conjugation_auto(v), main_auto(reversion_auto(v)));
  }
}

TEST(FundamentalMaps, KleinFourGroup) {
  const std::vector<Map> maps{[](const Element& v) { return v; }, main_auto, reversion_auto, conjugation_auto};
  // index of maps[i] o maps[j] in Z2 x Z2 = xor of labels
  for (int m = 1; m <= 3; ++m)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (const auto& a : all_signatures(m))
          for (const auto& b : all_signatures(m)) {
            const Element psi = Element::basis(EfbIndex(a, b));
            ASSERT_EQ(maps[i](maps[j](psi)), maps[i ^ j](psi));
          }
}

TEST(Beta, Examples) {
  for (int m = 1; m <= 4; ++m)
    for (int i = 1; i <= 2 * m; ++i) ASSERT_EQ(beta_anti(gamma(m, i)), gamma(m, i));
  const Element g12 = gamma(2, 1) * gamma(2, 2);
  EXPECT_EQ(beta_anti(g12), gamma(2, 2) * gamma(2, 1));
  EXPECT_EQ(beta_anti(g12), -g12);
  // beta(q p) = p q
  EXPECT_EQ(beta_anti(Element::basis(idx("+", "+"))), Element::basis(idx("-", "-")));
}

TEST(Beta, ReversalSignMatchesOracle) {
  for (int m = 1; m <= 4; ++m)
    for (const auto& a : all_signatures(m))
      for (const auto& b : all_signatures(m)) {
        const EfbIndex x(a, b);
        auto word = oracle::canonical_word(x);
        std::reverse(word.begin(), word.end());
        const Element reversed = oracle::reduce(m, oracle::NullWord{word});
        const Element expect = Rational(reversal_sign(x)) * Element::basis(EfbIndex(-b, -a));
        ASSERT_EQ(reversed, expect) << x.str();
        ASSERT_EQ(beta_anti(Element::basis(x)), expect);
      }
}

TEST(Beta, IsAnAntiautomorphism) {
  std::mt19937_64 rng(44);
  for (int m = 1; m <= 4; ++m)
    for (int t = 0; t < 20; ++t) {
      const Element u = efb::testing::random_element(rng, m, 0.3);
      const Element v = efb::testing::random_element(rng, m, 0.3);
      ASSERT_EQ(beta_anti(u * v), beta_anti(v) * beta_anti(u));
      ASSERT_EQ(beta_anti(beta_anti(u)), u);
    }
}

TEST(Dual, TransposeAndSymmetries) {
  std::mt19937_64 rng(45);
  for (int m = 1; m <= 4; ++m) {
    for (const auto& a : all_signatures(m)) {
      ASSERT_EQ(dual_transpose(Element::basis(EfbIndex(a, a))), Element::basis(EfbIndex(a, a)));
      for (const auto& b : all_signatures(m)) {
        const int s = reversal_sign(EfbIndex(a, b));
        ASSERT_EQ(s, reversal_sign(EfbIndex(b, a)));
        ASSERT_EQ(s, reversal_sign(EfbIndex(-b, -a)));
        ASSERT_EQ(s, reversal_sign(EfbIndex(-a, -b)));
      }
    }
    for (int t = 0; t < 10; ++t) {
      const Element v = efb::testing::random_element(rng, m, 0.3);
      ASSERT_EQ(to_matrix(dual_transpose(v)), to_matrix(v).transpose());
      ASSERT_EQ(dual_transpose(dual_transpose(v)), v);
      ASSERT_EQ(beta_anti(dual_transpose(v)), reversion_auto(v));
      ASSERT_EQ(dual_transpose(beta_anti(v)), reversion_auto(v));
    }
  }
}

TEST(Inverse, Examples) {
  for (int m = 1; m <= 4; ++m) {
    const Element w = omega(m);
    EXPECT_EQ(inverse(w), w * w * w);
    EXPECT_EQ(inverse(gamma(m, 2)), -gamma(m, 2));
    EXPECT_THROW(inverse(witt_p(m, 1)), NotInvertibleError);
    EXPECT_FALSE(is_invertible(witt_q(m, 1)));
    EXPECT_TRUE(is_invertible(tau(m)));
  }
  EXPECT_THROW(inverse(Element(2)), NotInvertibleError);
  std::mt19937_64 rng(46);
  for (int t = 0; t < 30; ++t) {
    const int m = 1 + t % 3;
    const Element x = efb::testing::random_invertible(rng, m);
    const Element y = inverse(x);
    ASSERT_EQ(x * y, identity(m));
    ASSERT_EQ(y * x, identity(m));
  }
}

TEST(Inner, Examples) {
  std::mt19937_64 rng(47);
  for (int m = 1; m <= 3; ++m) {
    for (int i = 1; i <= 2 * m; ++i) ASSERT_EQ(inner(omega(m), gamma(m, i)), -gamma(m, i));
    const Element x = efb::testing::random_invertible(rng, m);
    EXPECT_EQ(inner(x, identity(m)), identity(m));
  }
  EXPECT_THROW(inner(witt_p(2, 1), gamma(2, 1)), NotInvertibleError);
}

TEST(Inner, GroupLaw) {
  std::mt19937_64 rng(48);
  for (int t = 0; t < 60; ++t) {
    const int m = 1 + t % 3;
    const Element x = efb::testing::random_gamma_product(rng, m);
    const Element y = efb::testing::random_gamma_product(rng, m);
    const Element v = efb::testing::random_element(rng, m, 0.3);
    ASSERT_EQ(inner(x, inner(y, v)), inner(x * y, v));
  }
}

TEST(Inner, PreservesWeylSolutions) {
  std::mt19937_64 rng(49);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 60; ++t) {
    const int m = 1 + t % 3;
    const Element v = efb::testing::random_null_vector(rng, m);
    ASSERT_TRUE((v * v).is_zero());
    // v annihilates v mu for every mu.
    const Element phi = v * efb::testing::random_element(rng, m, 0.4);
    if (phi.is_zero()) continue;
    ASSERT_TRUE((v * phi).is_zero());
    const InnerAutomorphism a(efb::testing::random_invertible(rng, m));
    ASSERT_TRUE((a(v) * a(phi)).is_zero());
    ++checked;
  }
  EXPECT_GE(checked, 50);
}

TEST(RealizeInner, MainAutomorphismGivesOmega) {
  for (int m = 1; m <= 3; ++m) {
    std::vector<Element> images;
    for (int i = 1; i <= 2 * m; ++i) images.push_back(-gamma(m, i));
    const Element x = realize_inner(images);
    // omega's first coefficient (at Psi_{++..,++..}) is +1
    EXPECT_EQ(x, omega(m));
  }
}

TEST(RealizeInner, IdentityGivesUnit) {
  for (int m = 1; m <= 3; ++m) {
    std::vector<Element> images;
    for (int i = 1; i <= 2 * m; ++i) images.push_back(gamma(m, i));
    EXPECT_EQ(realize_inner(images), identity(m));
  }
}

TEST(RealizeInner, ReflectionGivesGamma1) {
  const std::vector<Element> images{gamma(1, 1), -gamma(1, 2)};
  const Element x = realize_inner(images);
  // proportional to gamma_1 = p + q, first coefficient (at q) normalized to 1
  EXPECT_EQ(x, gamma(1, 1));
  EXPECT_EQ(inner(gamma(1, 1), gamma(1, 2)), -gamma(1, 2));
}

TEST(RealizeInner, RoundTripOnFundamentalMaps) {
  for (int m = 1; m <= 3; ++m)
    for (const Map& f : std::vector<Map>{reversion_auto, conjugation_auto}) {
      std::vector<Element> images;
      for (int i = 1; i <= 2 * m; ++i) images.push_back(f(gamma(m, i)));
      const InnerAutomorphism a(realize_inner(images));
      for (int i = 1; i <= 2 * m; ++i) ASSERT_EQ(a(gamma(m, i)), images[i - 1]);
    }
}

TEST(RealizeInner, RejectsInvalidImages) {
  EXPECT_THROW(realize_inner(std::vector<Element>{gamma(1, 1)}), InvalidAutomorphismError);
  EXPECT_THROW(realize_inner(std::vector<Element>{gamma(1, 1), gamma(1, 1)}), InvalidAutomorphismError);
  // gamma_2 squares to -1, so it cannot be the image of gamma_1
  EXPECT_THROW(realize_inner(std::vector<Element>{gamma(1, 2), gamma(1, 1)}), InvalidAutomorphismError);
  EXPECT_THROW(realize_inner(std::vector<Element>{}), InvalidAutomorphismError);
}
