#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace efb {

// Exact coefficient field. All structural operations use it.
using Rational = mpq_class;

// Parses "a", "-a", "a/b". Throws ParseError on malformed input or b == 0.
Rational parse_rational(std::string_view text);

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool equal(const Rational& x, const Rational& y) { return x == y; }
  static std::string str(const Rational& x) { return x.get_str(); }
};

// Floating-point mode, used by the benchmark path.
template <>
struct ScalarTraits<double> {
  static constexpr double kRelTol = 1e-12;
  static bool is_zero(double x) { return x == 0.0; }
  static bool equal(double x, double y) {
    const double scale = std::fmax(1.0, std::fmax(std::fabs(x), std::fabs(y)));
    return std::fabs(x - y) <= kRelTol * scale;
  }
  static std::string str(double x) { return std::to_string(x); }
};

template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<From, Rational> && std::is_same_v<To, double>) {
    return x.get_d();
  } else {
    return To(x);
  }
}

}  // namespace efb
