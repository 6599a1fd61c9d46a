#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace minorforge {

__extension__ using Int128 = __int128;

/// Exact fraction with a positive denominator, always kept in lowest terms.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const Int128 lhs = static_cast<Int128>(a.num_) * b.den_;
    const Int128 rhs = static_cast<Int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend Rational operator*(const Rational& a, const Rational& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Compares `lhs` with `factor * rhs` without rounding. `factor` must be a
/// finite non-negative double; it is treated as the exact dyadic rational it
/// encodes. Requires 0 <= lhs < 2^62 and 0 <= rhs < 2^40.
std::strong_ordering compare_scaled(std::int64_t lhs, double factor, std::int64_t rhs);

}  // namespace minorforge
