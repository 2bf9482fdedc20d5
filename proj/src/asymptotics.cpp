#include "theta/asymptotics.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace theta {

namespace {

// B_2, B_4, ..., B_14
constexpr std::array<long double, 7> kBernoulli = {
    1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730, 7.0L / 6};

long double factorial(int n) {
  long double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Euler-Maclaurin correction -sum_k B_2k/(2k)! f^(2k-1)(N), given a callable
// returning the m-th derivative of f at N.
template <typename Derivative>
long double em_correction(Derivative&& derivative) {
  long double total = 0;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    const int order = static_cast<int>(2 * k - 1);
    total -= kBernoulli[k - 1] / factorial(static_cast<int>(2 * k)) * derivative(order);
  }
  return total;
}

}  // namespace

long double euler_gamma(int cutoff) {
  const long double n = cutoff;
  long double harmonic = 0;
  for (int i = cutoff; i >= 1; --i) harmonic += 1.0L / i;
  long double tail = 0;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    tail += kBernoulli[k - 1] / (2.0L * k * std::pow(n, 2.0L * k));
  }
  return harmonic - std::log(n) - 1.0L / (2 * n) + tail;
}

long double zeta(long double s, int cutoff) {
  if (s <= 1) throw std::domain_error("zeta: s must exceed 1");
  const long double n = cutoff;
  long double head = 0;
  for (int i = cutoff - 1; i >= 1; --i) head += std::pow(static_cast<long double>(i), -s);
  auto derivative = [&](int order) {
    // d^m/dx^m x^-s = (-1)^m s(s+1)...(s+m-1) x^(-s-m)
    long double c = (order % 2 == 0) ? 1 : -1;
    for (int i = 0; i < order; ++i) c *= s + i;
    return c * std::pow(n, -s - order);
  };
  return head + std::pow(n, 1 - s) / (s - 1) + std::pow(n, -s) / 2 + em_correction(derivative);
}

long double zeta_prime_2(int cutoff) {
  const long double n = cutoff;
  const long double log_n = std::log(n);
  long double head = 0;
  for (int i = cutoff - 1; i >= 2; --i) {
    const long double x = i;
    head += std::log(x) / (x * x);
  }
  // f(x) = log x / x^2; f^(m)(x) = x^(-2-m) (alpha_m log x + beta_m)
  auto derivative = [&](int order) {
    long double alpha = 1, beta = 0, power = 2;
    for (int i = 0; i < order; ++i) {
      beta = -power * beta + alpha;
      alpha = -power * alpha;
      power += 1;
    }
    return std::pow(n, -power) * (alpha * log_n + beta);
  };
  const long double integral = (log_n + 1) / n;
  const long double tail = integral + log_n / (n * n) / 2 + em_correction(derivative);
  return -(head + tail);
}

AsymptoticConstants compute_constants() {
  constexpr long double pi = std::numbers::pi_v<long double>;
  const long double g = euler_gamma();
  const long double zp = zeta_prime_2();
  const long double a = 12 * g - 3 + 10 * std::numbers::ln2_v<long double>;
  AsymptoticConstants c;
  c.gamma = static_cast<double>(g);
  c.zeta_prime_2 = static_cast<double>(zp);
  c.A = static_cast<double>(a);
  c.c_log = static_cast<double>(1 / (pi * pi));
  c.c_quad = static_cast<double>(a / (6 * pi * pi) - 6 * zp / (pi * pi * pi * pi));
  return c;
}

long double residue_constant_A(int gamma_cutoff) {
  const long double s = 2;
  const long double ln2 = std::log(2.0L);
  const long double u = std::pow(2.0L, 1 - s);
  const long double v = std::pow(2.0L, -s);
  const long double log_derivative = 2 * ln2 * u / (1 - u) - ln2 * v / (1 - v);
  return 6 * (2 * euler_gamma(gamma_cutoff) + log_derivative - 0.5L);
}

double main_term(std::int64_t x, const AsymptoticConstants& consts) {
  if (x < 1) throw std::domain_error("main_term requires x >= 1");
  const long double xx = static_cast<long double>(x);
  return static_cast<double>(consts.c_log * xx * xx * std::log(xx) + consts.c_quad * xx * xx);
}

namespace {

AsymptoticSample make_sample(std::int64_t x, i128 twice_partial, const AsymptoticConstants& consts) {
  AsymptoticSample s;
  s.x = x;
  s.twice_partial = twice_partial;
  s.main = main_term(x, consts);
  const long double half = static_cast<long double>(twice_partial) / 2;
  s.abs_err = static_cast<double>(std::fabs(half - static_cast<long double>(s.main)));
  s.rel_err = s.abs_err / s.main;
  return s;
}

}  // namespace

AsymptoticSample partial_sum_a(std::int64_t x, const SieveTables& tables,
                               const AsymptoticConstants& consts) {
  if (x < 1 || x > static_cast<std::int64_t>(tables.limit)) {
    throw std::domain_error("partial_sum_a: x outside sieve range");
  }
  i128 below = 0;
  for (std::int64_t n = 1; n < x; ++n) below += tables.a[static_cast<std::size_t>(n)];
  return make_sample(x, 2 * below + tables.a[static_cast<std::size_t>(x)], consts);
}

DirichletCheck dirichlet_spot_check(double s, std::int64_t truncation) {
  if (!(s >= 3)) throw std::domain_error("dirichlet_spot_check requires s >= 3");
  if (truncation < 1000) throw std::domain_error("dirichlet_spot_check requires truncation >= 1000");
  const SieveTables tables = build_sieves(static_cast<std::uint64_t>(truncation));
  const long double ls = s;
  long double g_sum = 0, f_sum = 0;
  for (auto n = static_cast<std::uint32_t>(truncation); n >= 1; --n) {
    const long double weight = std::pow(static_cast<long double>(n), -ls);
    g_sum += static_cast<long double>(pillai_from_spf(tables, n)) * weight;
    f_sum += static_cast<long double>(tables.a[n]) * weight;
  }
  const long double z1 = zeta(ls - 1);
  const long double g_closed = z1 * z1 / zeta(ls);
  const long double two_factor =
      std::pow(1 - std::pow(2.0L, 1 - ls), 2.0L) / (1 - std::pow(2.0L, -ls));
  DirichletCheck out;
  out.g_series = static_cast<double>(g_sum);
  out.g_closed = static_cast<double>(g_closed);
  out.f_series = static_cast<double>(f_sum);
  out.f_closed = static_cast<double>(two_factor * g_closed);
  return out;
}

std::optional<double> fit_log_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) return std::nullopt;
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<long double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0) || !(ys[i] > 0)) return std::nullopt;
    const long double lx = std::log(static_cast<long double>(xs[i]));
    const long double ly = std::log(static_cast<long double>(ys[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const long double denom = n * sxx - sx * sx;
  if (std::fabs(denom) < 1e-18L) return std::nullopt;
  return static_cast<double>((n * sxy - sx * sy) / denom);
}

ErrorScan error_scan(std::span<const std::int64_t> xs, const SieveTables& tables,
                     const AsymptoticConstants& consts) {
  ErrorScan out;
  i128 below = 0;
  std::int64_t next = 1;
  std::int64_t previous = 0;
  for (std::int64_t x : xs) {
    if (x < 1 || x > static_cast<std::int64_t>(tables.limit)) {
      throw std::domain_error("error_scan: x outside sieve range");
    }
    if (x <= previous) throw std::domain_error("error_scan: xs must be strictly ascending");
    previous = x;
    for (; next < x; ++next) below += tables.a[static_cast<std::size_t>(next)];
    out.samples.push_back(make_sample(x, 2 * below + tables.a[static_cast<std::size_t>(x)], consts));
  }
  std::vector<double> lx, ly;
  for (const auto& s : out.samples) {
    lx.push_back(static_cast<double>(s.x));
    ly.push_back(s.abs_err);
  }
  out.slope = fit_log_slope(lx, ly);
  return out;
}

void write_samples_csv(std::ostream& os, std::span<const AsymptoticSample> samples) {
  os << "x,partial_sum_times_two,main_term,abs_err,rel_err\n";
  char buf[128];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g", s.main, s.abs_err, s.rel_err);
    os << s.x << ',' << to_string(s.twice_partial) << ',' << buf << '\n';
  }
}

}  // namespace theta
