#include "theta/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace theta {

std::string to_string(i128 v) {
  if (v == 0) return "0";
  u128 mag = abs_u128(v);
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (v < 0) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

i128 parse_i128(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("malformed integer: " + text);
  i128 value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer: " + text);
    value = checked_add(checked_mul(value, 10), negative ? -(c - '0') : (c - '0'));
  }
  return value;
}

Rational::Rational(i128 numerator) : num_(numerator), den_(1) {}

Rational::Rational(i128 numerator, i128 denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  if (denominator < 0) {
    numerator = checked_sub(0, numerator);
    denominator = checked_sub(0, denominator);
  }
  u128 g = gcd_u128(abs_u128(numerator), static_cast<u128>(denominator));
  if (g == 0) g = 1;
  num_ = numerator / static_cast<i128>(g);
  den_ = denominator / static_cast<i128>(g);
  if (num_ == 0) den_ = 1;
}

i128 Rational::floor() const { return floordiv(num_, den_); }

Rational Rational::fractional_part() const { return Rational(floormod(num_, den_), den_); }

double Rational::to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

Rational Rational::operator-() const { return Rational(checked_sub(0, num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  // Reduce against gcd of denominators first to keep intermediates small.
  i128 g = static_cast<i128>(gcd_u128(static_cast<u128>(den_), static_cast<u128>(o.den_)));
  i128 lhs = checked_mul(num_, o.den_ / g);
  i128 rhs = checked_mul(o.num_, den_ / g);
  *this = Rational(checked_add(lhs, rhs), checked_mul(den_, o.den_ / g));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  i128 g1 = static_cast<i128>(gcd_u128(abs_u128(num_), static_cast<u128>(o.den_)));
  i128 g2 = static_cast<i128>(gcd_u128(abs_u128(o.num_), static_cast<u128>(den_)));
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  *this = Rational(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = checked_mul(a.num_, b.den_);
  i128 rhs = checked_mul(b.num_, a.den_);
  return lhs <=> rhs;
}

}  // namespace theta
