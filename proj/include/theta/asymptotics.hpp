#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "theta/sieve.hpp"
#include "theta/wide.hpp"

namespace theta {

struct AsymptoticConstants {
  double gamma = 0;         // Euler's constant
  double zeta_prime_2 = 0;  // zeta'(2)
  double A = 0;             // 12*gamma - 3 + 10*log 2
  double c_log = 0;         // coefficient of x^2 log x
  double c_quad = 0;        // coefficient of x^2
};

/// One comparison of the primed partial sum of a_n against the main term.
struct AsymptoticSample {
  std::int64_t x = 0;
  i128 twice_partial = 0;  // 2*sum_{n<x} a_n + a_x
  double main = 0;
  double abs_err = 0;
  double rel_err = 0;
};

/// Euler's constant by Euler-Maclaurin on H_n with n = `cutoff`.
long double euler_gamma(int cutoff = 20);

/// zeta(s) for real s > 1 by Euler-Maclaurin.
long double zeta(long double s, int cutoff = 20);

/// zeta'(2) = -sum log(n)/n^2, head summed directly, tail by Euler-Maclaurin.
long double zeta_prime_2(int cutoff = 20);

/// Residue of F(s) x^s / s at the double pole s = 2:
///   x^2 log x / pi^2 + x^2 (A/(6 pi^2) - 6 zeta'(2)/pi^4).
AsymptoticConstants compute_constants();

/// A recovered from the Laurent expansion of F(s) x^s / s at s = 2, i.e.
/// 6*(2*gamma + P'(2)/P(2) - 1/2) with P(s) = (1-2^(1-s))^2 / (1-2^-s).
/// Uses its own gamma evaluation; an independent route to the closed form.
long double residue_constant_A(int gamma_cutoff = 40);

double main_term(std::int64_t x, const AsymptoticConstants& consts);

/// Throws std::domain_error when x is outside 1..tables.limit.
AsymptoticSample partial_sum_a(std::int64_t x, const SieveTables& tables,
                               const AsymptoticConstants& consts);

struct DirichletCheck {
  double g_series = 0;  // sum_{n<=N} pillai(n) / n^s
  double g_closed = 0;  // zeta(s-1)^2 / zeta(s)
  double f_series = 0;  // sum_{n<=N} a_n / n^s
  double f_closed = 0;  // (1-2^(1-s))^2 / (1-2^-s) * G closed form
};

/// Truncated generating series vs zeta closed forms. Throws std::domain_error
/// for s < 3 or truncation < 1000.
DirichletCheck dirichlet_spot_check(double s, std::int64_t truncation);

struct ErrorScan {
  std::vector<AsymptoticSample> samples;
  std::optional<double> slope;  // empty when some abs_err is zero
};

/// Least-squares slope of log y against log x; empty if any y <= 0 or the
/// xs are all equal.
std::optional<double> fit_log_slope(std::span<const double> xs, std::span<const double> ys);

/// Samples at every x in `xs` (ascending, <= tables.limit) in one prefix pass.
ErrorScan error_scan(std::span<const std::int64_t> xs, const SieveTables& tables,
                     const AsymptoticConstants& consts);

/// `x,partial_sum_times_two,main_term,abs_err,rel_err` with 15 significant digits.
void write_samples_csv(std::ostream& os, std::span<const AsymptoticSample> samples);

}  // namespace theta
