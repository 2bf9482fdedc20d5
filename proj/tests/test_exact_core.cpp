#include <limits>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "theta/exact_core.hpp"
#include "theta/rational.hpp"
#include "theta/wide.hpp"

using namespace theta;

TEST_CASE("S(h,k) small values") {
  CHECK(s_hk_naive(1, 3).value == 0);
  CHECK(s_hk_naive(9, 10).value == 9);
  CHECK(s_hk_naive(2, 3).value == 2);
  CHECK(s_hk_naive(3, 2).value == -1);
  CHECK(s_hk_naive(2, 3).value + s_hk_naive(3, 2).value == 1);
  CHECK(s_hk_naive(7, 10).value == 3);
  CHECK(s_hk_naive(3, 9).value == -2);
  CHECK(s_hk_naive(1, 1).value == 0);
  CHECK(s_hk_naive(5, 7).method == Method::naive);
}

TEST_CASE("S(k) values") {
  CHECK(s_k_naive(1).value == 0);
  CHECK(s_k_naive(4).value == 5);
  CHECK(s_k_naive(8).value == 11);
  CHECK(s_k_naive(9).value == 8);
  CHECK(s_k_naive(10).value == 17);
  const std::int64_t first_eight[] = {0, 1, 2, 5, 4, 7, 10, 11};
  for (std::int64_t k = 1; k <= 8; ++k) CHECK(s_k_naive(k).value == first_eight[k - 1]);
}

TEST_CASE("T(h,k) and T(k) values") {
  CHECK(t_hk_naive(2, 5).value == 1);
  CHECK(t_hk_naive(3, 9).value == -5);
  CHECK(t_hk_naive(1, 1).value == -1);
  CHECK(t_hk_naive(4, 8).value == 1);
  CHECK(t_hk_naive(4, 12).value == -7);
  CHECK(t_k_naive(5).value == -9);
  CHECK(t_k_naive(15).value == -61);
  CHECK(t_k_naive(16).value == -1);
  CHECK(t_k_naive(9).value == -25);
  const std::int64_t table[] = {-1, -1, -5, -1, -9, -9, -13, -1, -25, -17,
                                -21, -17, -25, -25, -61, -1, -33, -49, -37, -33};
  for (std::int64_t k = 1; k <= 20; ++k) CHECK(t_k_naive(k).value == table[k - 1]);
}

TEST_CASE("naive sums agree with the oracle, h beyond k included") {
  for (std::int64_t k = 1; k <= 40; ++k) {
    for (std::int64_t h = 1; h <= 2 * k + 3; ++h) {
      REQUIRE(s_hk_naive(h, k).value == oracle::S(h, k));
      REQUIRE(t_hk_naive(h, k).value == oracle::T(h, k));
    }
    CHECK(s_k_naive(k).value == oracle::Sk(k));
    CHECK(t_k_naive(k).value == oracle::Tk(k));
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(s_hk_naive(0, 5), std::domain_error);
  CHECK_THROWS_AS(s_hk_naive(3, 0), std::domain_error);
  CHECK_THROWS_AS(s_k_naive(-1), std::domain_error);
  CHECK_THROWS_AS(t_hk_naive(1, (std::int64_t{1} << 31) + 1), std::range_error);
  CHECK_THROWS_AS(check_sum_args((std::int64_t{1} << 32) + 1, 7), std::range_error);
  CHECK_NOTHROW(check_sum_args(1, std::int64_t{1} << 31));
}

TEST_CASE("parity of S(h,k) and S(k)") {
  for (std::int64_t k = 2; k <= 120; ++k) {
    for (std::int64_t h = 1; h < k; ++h) {
      REQUIRE(((s_hk_naive(h, k).value - (k - 1)) % 2 + 2) % 2 == 0);
    }
    CHECK(((s_k_naive(k).value + k) % 2 + 2) % 2 == 1);
  }
}

TEST_CASE("sawtooth") {
  CHECK(sawtooth(3, 1) == Rational(0));
  CHECK(sawtooth(1, 2) == Rational(0));
  CHECK(sawtooth(2, 3) == Rational(1, 6));
  CHECK(sawtooth(-1, 3) == Rational(1, 6));  // odd function: -((1/3))
  CHECK(sawtooth(7, 4) == Rational(1, 4));
  CHECK_THROWS_AS(sawtooth(1, 0), std::domain_error);
}

TEST_CASE("Dedekind sums") {
  CHECK(dedekind_s(1, 1) == Rational(0));
  CHECK(dedekind_s(2, 3) == Rational(-1, 18));
  CHECK(dedekind_s(1, 3) == Rational(1, 18));
  // s(1,c) = (c-1)(c-2)/(12c)
  for (std::int64_t c = 1; c <= 60; ++c) {
    CHECK(dedekind_s(1, c) == Rational((c - 1) * (c - 2), 12 * c));
  }
  // reciprocity for coprime pairs, exact
  for (std::int64_t c = 1; c <= 40; ++c) {
    for (std::int64_t d = 1; d <= 40; ++d) {
      if (std::gcd(c, d) != 1) continue;
      Rational rhs = Rational(-1, 4) + Rational(1, 12) * (Rational(c, d) + Rational(1, c * d) + Rational(d, c));
      REQUIRE(dedekind_s(c, d) + dedekind_s(d, c) == rhs);
    }
  }
}

TEST_CASE("greatest integer") {
  CHECK(greatest_integer(7, 2) == 3);
  CHECK(greatest_integer(-7, 2) == -4);
  CHECK(greatest_integer(-6, 2) == -3);
  CHECK(greatest_integer(0, 5) == 0);
}

TEST_CASE("Rational arithmetic") {
  Rational a(1, 3), b(-2, 6);
  CHECK(b == Rational(-1, 3));
  CHECK(a + b == Rational(0));
  CHECK(a * Rational(3) == Rational(1));
  CHECK(a / Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).fractional_part() == Rational(1, 2));
  CHECK(Rational(5, 3).fractional_part() == Rational(2, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-8, 4).str() == "-2");
  CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("Rational overflow is reported, not wrapped") {
  const i128 big = static_cast<i128>(std::numeric_limits<std::int64_t>::max()) << 60;
  Rational r(big);
  CHECK_THROWS_AS(r * r, std::range_error);
  CHECK_THROWS_AS(checked_mul(big, big), std::range_error);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<i128>::max() - 1, i128{5}), std::range_error);
}

TEST_CASE("i128 text round trip") {
  const i128 v = -(static_cast<i128>(123456789012345678LL) * 1000000007);
  CHECK(parse_i128(to_string(v)) == v);
  CHECK(to_string(i128{0}) == "0");
  CHECK_THROWS(parse_i128("12x"));
}
