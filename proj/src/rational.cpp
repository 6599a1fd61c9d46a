#include "minorforge/rational.hpp"

#include <cmath>
#include <numeric>

#include "minorforge/errors.hpp"

namespace minorforge {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first so the products stay small.
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

std::strong_ordering compare_scaled(std::int64_t lhs, double factor, std::int64_t rhs) {
  if (!std::isfinite(factor) || factor < 0 || lhs < 0 || rhs < 0)
    throw InputError("compare_scaled: arguments must be finite and non-negative");
  if (factor == 0 || rhs == 0) return lhs <=> std::int64_t{0};

  // factor = mantissa * 2^exponent with an integral 53-bit mantissa.
  int exponent = 0;
  const double fraction = std::frexp(factor, &exponent);
  const auto mantissa = static_cast<std::int64_t>(std::ldexp(fraction, 53));
  exponent -= 53;

  const Int128 product = static_cast<Int128>(mantissa) * rhs;  // < 2^93
  if (exponent >= 0) {
    if (exponent >= 30) return std::strong_ordering::less;  // product * 2^e >= 2^82 > lhs
    return static_cast<Int128>(lhs) <=> (product << exponent);
  }
  const int shift = -exponent;
  if (shift >= 127) return lhs == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const Int128 whole = product >> shift;
  const Int128 rest = product - (whole << shift);
  if (static_cast<Int128>(lhs) != whole) return static_cast<Int128>(lhs) <=> whole;
  return rest > 0 ? std::strong_ordering::less : std::strong_ordering::equal;
}

}  // namespace minorforge
