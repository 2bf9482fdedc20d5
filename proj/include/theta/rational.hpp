#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "theta/wide.hpp"

namespace theta {

/// Exact fraction over 128-bit integers, always stored in lowest terms with a
/// positive denominator. Every arithmetic operation is overflow-checked and
/// throws std::range_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(i128 numerator);  // NOLINT(google-explicit-constructor)
  Rational(i128 numerator, i128 denominator);

  i128 numerator() const { return num_; }
  i128 denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// Greatest integer <= this value.
  i128 floor() const;
  /// Value minus its floor, in [0, 1).
  Rational fractional_part() const;
  double to_double() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

}  // namespace theta
