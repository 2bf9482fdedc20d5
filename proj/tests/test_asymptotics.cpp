#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "theta/asymptotics.hpp"
#include "theta/sieve.hpp"

using namespace theta;

namespace {

// Reference constants to 17 digits.
constexpr double kGamma = 0.57721566490153286;
constexpr double kZetaPrime2 = -0.93754825431584375;
constexpr double kZeta3 = 1.2020569031595943;
constexpr double kZeta4 = 1.0823232337111382;

double ref_c_quad() {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double A = 12 * kGamma - 3 + 10 * std::numbers::ln2;
  return A / (6 * pi2) - 6 * kZetaPrime2 / (pi2 * pi2);
}

}  // namespace

TEST_CASE("constants") {
  const auto c = compute_constants();
  CHECK(c.gamma == doctest::Approx(kGamma).epsilon(1e-13));
  CHECK(c.zeta_prime_2 == doctest::Approx(kZetaPrime2).epsilon(1e-12));
  CHECK(std::fabs(c.A - (12 * kGamma - 3 + 10 * std::numbers::ln2)) < 1e-12);
  CHECK(c.c_log == doctest::Approx(0.101321183642).epsilon(1e-11));
  CHECK(c.c_quad == doctest::Approx(ref_c_quad()).epsilon(1e-12));
  CHECK(std::fabs(static_cast<double>(residue_constant_A()) - c.A) < 1e-12);
  CHECK(static_cast<double>(zeta(3.0L)) == doctest::Approx(kZeta3).epsilon(1e-14));
  CHECK(static_cast<double>(zeta(4.0L)) == doctest::Approx(kZeta4).epsilon(1e-14));
}

TEST_CASE("main term") {
  const auto c = compute_constants();
  CHECK(main_term(1, c) == doctest::Approx(c.c_quad));
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double at10 = 100 * std::log(10.0) / pi2 + 100 * ref_c_quad();
  CHECK(main_term(10, c) == doctest::Approx(at10).epsilon(1e-12));
  CHECK(main_term(10, c) == doctest::Approx(47.44).epsilon(1e-3));
  const double ratio = main_term(2000000, c) / main_term(1000000, c);
  CHECK(ratio > 4.0);
  CHECK(ratio < 4.3);
}

TEST_CASE("primed partial sums") {
  const auto t = build_sieves(100);
  const auto c = compute_constants();
  CHECK(partial_sum_a(1, t, c).twice_partial == 1);
  CHECK(partial_sum_a(10, t, c).twice_partial == 98);
  CHECK(partial_sum_a(9, t, c).twice_partial == 77);
  for (std::int64_t x = 1; x <= 100; ++x) {
    std::int64_t twice = 0;
    for (std::int64_t n = 1; n < x; ++n) twice += 2 * static_cast<std::int64_t>(t.a[n]);
    twice += static_cast<std::int64_t>(t.a[x]);
    const auto s = partial_sum_a(x, t, c);
    REQUIRE(s.twice_partial == twice);
    CHECK(s.abs_err == doctest::Approx(std::fabs(twice / 2.0 - main_term(x, c))));
  }
  CHECK_THROWS_AS(partial_sum_a(101, t, c), std::domain_error);
  CHECK_THROWS_AS(partial_sum_a(0, t, c), std::domain_error);
}

TEST_CASE("Dirichlet series spot checks") {
  const auto d4 = dirichlet_spot_check(4, 100000);
  CHECK(std::fabs(d4.g_series - kZeta3 * kZeta3 / kZeta4) < 1e-3);
  CHECK(std::fabs(d4.g_closed - 1.33504) < 1e-4);
  CHECK(std::fabs(d4.f_series - d4.f_closed) < 1e-3);
  CHECK(std::fabs(d4.f_closed - 1.0903) < 1e-3);
  const auto d20 = dirichlet_spot_check(20, 1000);
  CHECK(std::fabs(d20.f_series - 1.0) < 1e-5);
  CHECK(std::fabs(d20.f_closed - 1.0) < 1e-5);
  CHECK_THROWS_AS(dirichlet_spot_check(2, 100000), std::domain_error);
  CHECK_THROWS_AS(dirichlet_spot_check(4, 10), std::domain_error);
}

TEST_CASE("log slope fit") {
  std::vector<double> xs, ys;
  for (double x : {1e3, 1e4, 1e5, 1e6}) {
    xs.push_back(x);
    ys.push_back(std::pow(x, 1.2));
  }
  const auto s = fit_log_slope(xs, ys);
  REQUIRE(s);
  CHECK(std::fabs(*s - 1.2) < 1e-6);
  ys[1] = 0;
  CHECK_FALSE(fit_log_slope(xs, ys));
  std::vector<double> same{5, 5}, vals{1, 2};
  CHECK_FALSE(fit_log_slope(same, vals));
}

TEST_CASE("error scan across decades") {
  const auto t = build_sieves(1000000);
  const auto c = compute_constants();
  const std::vector<std::int64_t> xs{1000, 10000, 100000, 1000000};
  const auto scan = error_scan(xs, t, c);
  REQUIRE(scan.samples.size() == 4);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(scan.samples[i].twice_partial == partial_sum_a(xs[i], t, c).twice_partial);
  }
  for (std::size_t i = 1; i < 4; ++i) CHECK(scan.samples[i].rel_err < scan.samples[i - 1].rel_err);
  CHECK(scan.samples.back().rel_err < 0.05);
  REQUIRE(scan.slope);
  CHECK(*scan.slope <= 1.7);
  const std::vector<std::int64_t> unsorted{100, 10};
  CHECK_THROWS_AS(error_scan(unsorted, t, c), std::domain_error);
}

TEST_CASE("samples CSV") {
  const auto t = build_sieves(100);
  const auto c = compute_constants();
  const std::vector<std::int64_t> xs{10, 100};
  const auto scan = error_scan(xs, t, c);
  std::ostringstream os;
  write_samples_csv(os, scan.samples);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "x,partial_sum_times_two,main_term,abs_err,rel_err");
  std::getline(is, line);
  CHECK(line.rfind("10,98,", 0) == 0);
}
