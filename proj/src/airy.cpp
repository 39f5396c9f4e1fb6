#include "kpzlab/airy.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "kpzlab/quadrature.hpp"

namespace kpzlab {

namespace {

constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
constexpr long double kAip0 = 0.258819403792806798405183560189203963L;  // -Ai'(0)
constexpr double kPi = std::numbers::pi;

// u_k of the Airy asymptotic expansions and v_k = -(6k+1)/(6k-1) u_k.
struct AsymptoticCoefficients {
  static constexpr int kTerms = 40;
  std::array<double, kTerms> u{};
  std::array<double, kTerms> v{};

  AsymptoticCoefficients() {
    u[0] = v[0] = 1.0;
    for (int k = 1; k < kTerms; ++k) {
      u[k] = u[k - 1] * (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k);
      v[k] = -(6.0 * k + 1) / (6.0 * k - 1) * u[k];
    }
  }
};

const AsymptoticCoefficients& coefficients() {
  static const AsymptoticCoefficients c;
  return c;
}

// Sums sign^k c_k z^{-k} over k of the given parity, stopping at the
// smallest term of the divergent series.
double series_sum(const std::array<double, AsymptoticCoefficients::kTerms>& c, double inv_zeta,
                  int parity, bool alternate) {
  double sum = 0.0, prev = INFINITY;
  double power = parity == 0 ? 1.0 : inv_zeta;
  const double step = inv_zeta * inv_zeta;
  int j = 0;
  for (int k = parity; k < AsymptoticCoefficients::kTerms; k += 2, ++j) {
    const double term = c[k] * power;
    if (std::abs(term) >= prev) break;
    sum += (alternate && (j % 2 == 1)) ? -term : term;
    prev = std::abs(term);
    if (prev < 1e-18 * std::abs(sum)) break;
    power *= step;
  }
  return sum;
}

// sum_k (-1)^k c_k z^{-k} over all k.
double alternating_sum(const std::array<double, AsymptoticCoefficients::kTerms>& c,
                       double inv_zeta) {
  double sum = 0.0, prev = INFINITY, power = 1.0;
  for (int k = 0; k < AsymptoticCoefficients::kTerms; ++k) {
    const double term = c[k] * power;
    if (std::abs(term) >= prev) break;
    sum += (k % 2) ? -term : term;
    prev = std::abs(term);
    if (prev < 1e-18 * std::abs(sum)) break;
    power *= inv_zeta;
  }
  return sum;
}

}  // namespace

AiryValue airy_series(double xd) {
  const long double x = xd, x3 = x * x * x;
  // f = sum x^{3k}/prod (3j-1)(3j), g = sum x^{3k+1}/prod (3j)(3j+1)
  long double f = 1, g = x, fp = 0, gp = 1;
  long double tf = 1, tg = x, tfp = x * x / 2, tgp = 1;
  fp = tfp;
  for (int k = 0; k < 200; ++k) {
    tf *= x3 / ((3 * k + 2) * (3 * k + 3));
    tg *= x3 / ((3 * k + 3) * (3 * k + 4));
    tfp *= x3 / ((3 * k + 3) * (3 * k + 5));
    tgp *= x3 / ((3 * k + 1) * (3 * k + 3));
    f += tf;
    g += tg;
    fp += tfp;
    gp += tgp;
    const long double small = 1e-21L * (std::abs(f) + std::abs(g) + std::abs(fp) + std::abs(gp));
    if (std::abs(tf) + std::abs(tg) + std::abs(tfp) + std::abs(tgp) < small) break;
  }
  AiryValue v;
  v.ai = static_cast<double>(kAi0 * f - kAip0 * g);
  v.aip = static_cast<double>(kAi0 * fp - kAip0 * gp);
  v.in_window = std::abs(xd) <= 12.0;
  return v;
}

AiryValue airy_asymptotic(double x) {
  const auto& c = coefficients();
  AiryValue v;
  v.in_window = std::abs(x) <= 12.0;
  if (x > 0) {
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    const double pre = std::exp(-zeta) / (2.0 * std::sqrt(kPi));
    const double q = std::sqrt(std::sqrt(x));
    v.ai = pre / q * alternating_sum(c.u, 1.0 / zeta);
    v.aip = -pre * q * alternating_sum(c.v, 1.0 / zeta);
    return v;
  }
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const double q = std::sqrt(std::sqrt(z));
  const double s = std::sin(zeta + kPi / 4), co = std::cos(zeta + kPi / 4);
  const double iz = 1.0 / zeta;
  const double u_even = series_sum(c.u, iz, 0, true), u_odd = series_sum(c.u, iz, 1, true);
  const double v_even = series_sum(c.v, iz, 0, true), v_odd = series_sum(c.v, iz, 1, true);
  v.ai = (s * u_even - co * u_odd) / (std::sqrt(kPi) * q);
  v.aip = -q / std::sqrt(kPi) * (co * v_even + s * v_odd);
  return v;
}

AiryValue airy(double x) {
  return std::abs(x) <= kAirySwitch ? airy_series(x) : airy_asymptotic(x);
}

namespace {

constexpr double kRightCut = 40.0;  // Ai(40) ~ 1e-74
constexpr int kKnotMin = -20;

// Table of int_k^inf Ai for integer k in [kKnotMin, kRightCut].
struct RightIntegralTable {
  std::array<double, static_cast<std::size_t>(kRightCut) - kKnotMin + 1> value{};

  RightIntegralTable() {
    const GaussLegendre<double> rule(24);
    const auto ai = [](double t) { return airy(t).ai; };
    double acc = 0.0;
    for (int k = static_cast<int>(kRightCut); k >= kKnotMin; --k) {
      value[static_cast<std::size_t>(k - kKnotMin)] = acc;
      if (k > kKnotMin) {
        // unit panel, split in four to follow the oscillation on the left
        for (int p = 0; p < 4; ++p) acc += rule.integrate(ai, k - 1 + 0.25 * p, k - 0.75 + 0.25 * p);
      }
    }
  }
};

const RightIntegralTable& right_table() {
  static const RightIntegralTable t;
  return t;
}

// int_z^inf Ai(-t) dt = alpha Ai(-z) + beta Ai'(-z) for z >= 20, from
// R_n = -z^{-n-1} Ai'(-z) + (n+1) z^{-n-2} Ai(-z) - (n+1)(n+2) R_{n+3}.
void tail_coefficients(double z, double& alpha, double& beta) {
  alpha = beta = 0.0;
  double coef = 1.0, prev = INFINITY;
  for (int n = 0; n < 300; n += 3) {
    const double b = -coef * std::pow(z, -n - 1);
    const double a = coef * (n + 1) * std::pow(z, -n - 2);
    const double size = std::abs(b) + std::abs(a) / std::sqrt(z);
    if (size >= prev) break;
    alpha += a;
    beta += b;
    prev = size;
    if (prev < 1e-18) break;
    coef *= -static_cast<double>((n + 1) * (n + 2));
  }
}

double left_tail(double z) {
  const AiryValue a = airy(-z);
  double alpha, beta;
  tail_coefficients(z, alpha, beta);
  return alpha * a.ai + beta * a.aip;
}

}  // namespace

double airy_integral_right(double x) {
  if (x >= kRightCut) return 0.0;
  if (x < kKnotMin) return 1.0 - left_tail(-x);
  const auto& table = right_table();
  const int k = static_cast<int>(std::ceil(x));
  static const GaussLegendre<double> rule(24);
  const double part = k == x ? 0.0 : rule.integrate([](double t) { return airy(t).ai; }, x, double(k));
  return part + table.value[static_cast<std::size_t>(k - kKnotMin)];
}

AiryOscillatory airy_oscillatory(double z) {
  const auto& c = coefficients();
  AiryOscillatory o;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const double iz = 1.0 / zeta;
  const double q = std::sqrt(std::sqrt(z));
  o.phase = zeta + kPi / 4;
  o.a = std::complex<double>(series_sum(c.u, iz, 0, true), -series_sum(c.u, iz, 1, true)) /
        (std::sqrt(kPi) * q);
  o.b = -q / std::sqrt(kPi) *
        std::complex<double>(series_sum(c.v, iz, 0, true), -series_sum(c.v, iz, 1, true));
  double alpha, beta;
  tail_coefficients(z, alpha, beta);
  o.c = alpha * o.a + std::complex<double>(0.0, beta) * o.b;
  return o;
}

double airy_integral_left(double x) {
  if (x < kKnotMin) return left_tail(-x);
  return 1.0 - airy_integral_right(x);
}

}  // namespace kpzlab
