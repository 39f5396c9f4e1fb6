#include "kpzlab/painleve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <string>

#include "kpzlab/airy.hpp"
#include "kpzlab/errors.hpp"
#include "kpzlab/quadrature.hpp"

namespace kpzlab {

namespace {

constexpr double kBlowUp = 1e6;

using real = long double;

PainleveState rhs(real s, const PainleveState& y) {
  PainleveState d;
  const real q = y(0);
  d(0) = y(1);
  d(1) = s * q + 2.0 * q * q * q;
  d(2) = -q;
  d(3) = -q * q;
  d(4) = -y(3);
  return d;
}

// Dormand-Prince 5(4) tableau.
constexpr real c2 = 1.0L / 5, c3 = 3.0L / 10, c4 = 4.0L / 5, c5 = 8.0L / 9;
constexpr real a21 = 1.0L / 5;
constexpr real a31 = 3.0L / 40, a32 = 9.0L / 40;
constexpr real a41 = 44.0L / 45, a42 = -56.0L / 15, a43 = 32.0L / 9;
constexpr real a51 = 19372.0L / 6561, a52 = -25360.0L / 2187, a53 = 64448.0L / 6561,
                 a54 = -212.0L / 729;
constexpr real a61 = 9017.0L / 3168, a62 = -355.0L / 33, a63 = 46732.0L / 5247, a64 = 49.0L / 176,
                 a65 = -5103.0L / 18656;
constexpr real b1 = 35.0L / 384, b3 = 500.0L / 1113, b4 = 125.0L / 192, b5 = -2187.0L / 6784,
                 b6 = 11.0L / 84;
constexpr real e1 = 71.0L / 57600, e3 = -71.0L / 16695, e4 = 71.0L / 1920, e5 = -17253.0L / 339200,
                 e6 = 22.0L / 525, e7 = -1.0L / 40;

// Ai and Ai' for x >= 12 in extended precision; the smallest term of the
// asymptotic series is below 1e-23 there.
std::pair<real, real> airy_far_right(real x) {
  const real zeta = 2.0L / 3.0L * x * std::sqrt(x);
  real u = 1, v = 1, su = 1, sv = 1, p = 1;
  for (int k = 1; k < 30; ++k) {
    u *= static_cast<real>((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / ((2 * k - 1) * 216.0L * k);
    const real vk = -static_cast<real>(6 * k + 1) / (6 * k - 1) * u;
    p /= -zeta;
    su += u * p;
    sv += vk * p;
    if (std::abs(u * p) < 1e-24L) break;
  }
  const real pre = std::exp(-zeta) / (2 * std::sqrt(std::numbers::pi_v<real>));
  const real q = std::sqrt(std::sqrt(x));
  return {pre / q * su, -pre * q * sv};
}

}  // namespace

PainleveState painleve_boundary(double s0) {
  if (s0 < kPainleveSeed) return painleve_advance(painleve_boundary(kPainleveSeed), kPainleveSeed, s0, StepControl{});
  const auto [ai, aip] = airy_far_right(s0);
  const GaussLegendre<double> rule(24);
  const double cut = std::max(s0, 0.0) + 30.0;
  const auto panel = [](double) { return 0.5; };
  PainleveState y;
  y(0) = ai;
  y(1) = aip;
  y(2) = airy_integral_right(s0);
  y(3) = integrate_panels([](double x) { const double v = airy(x).ai; return v * v; }, s0, cut, panel, rule);
  y(4) = integrate_panels([s0](double x) { const double v = airy(x).ai; return (x - s0) * v * v; },
                          s0, cut, panel, rule);
  return y;
}

PainleveState painleve_advance(PainleveState y, double from, double to, const StepControl& ctl,
                               long* accepted, long* rejected) {
  if (from == to) return y;
  const real dir = to > from ? 1 : -1;
  real s = from;
  real h = std::min(ctl.max_step, 1e-3) * dir;
  PainleveState k1 = rhs(s, y);
  while (dir * (to - s) > 0) {
    if (dir * (s + h - to) > 0) h = to - s;
    const PainleveState k2 = rhs(s + c2 * h, y + h * (a21 * k1));
    const PainleveState k3 = rhs(s + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const PainleveState k4 = rhs(s + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const PainleveState k5 = rhs(s + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const PainleveState k6 =
        rhs(s + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const PainleveState y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const PainleveState k7 = rhs(s + h, y5);
    const PainleveState err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    real ratio = 0;
    for (int i = 0; i < 5; ++i) {
      const real scale = ctl.atol + ctl.rtol * std::max(std::abs(y(i)), std::abs(y5(i)));
      ratio = std::max(ratio, std::abs(err(i)) / scale);
    }
    const real factor = std::clamp(0.9L * std::pow(std::max(ratio, 1e-10L), -0.2L), 0.2L, 5.0L);
    if (ratio <= 1) {
      s = (std::abs(to - (s + h)) < 1e-16L * std::max(1.0L, std::abs(real(to)))) ? real(to) : s + h;
      y = y5;
      k1 = k7;
      if (accepted) ++*accepted;
      if (!std::isfinite(y(0)) || std::abs(y(0)) > kBlowUp)
        throw NumericError("painleve: solution blew up near s = " + std::to_string(double(s)) +
                           " (left the Hastings-McLeod branch)");
    } else if (rejected) {
      ++*rejected;
    }
    h = dir * std::min(std::abs(h) * factor, real(ctl.max_step));
    if (std::abs(h) < 1e-12L) throw NumericError("painleve: step size underflow");
  }
  return y;
}

PainleveSolution painleve2_solve(double s_max, double s_min, double step, const StepControl& ctl) {
  if (s_max < 6.0) throw InvalidParameter("painleve2_solve: s_max must be >= 6");
  if (s_min < -10.0) throw InvalidParameter("painleve2_solve: s_min must be >= -10");
  if (!(s_min < s_max)) throw InvalidParameter("painleve2_solve: need s_min < s_max");
  if (!(step > 0.0)) throw InvalidParameter("painleve2_solve: step must be positive");

  PainleveSolution sol;
  sol.control = ctl;
  PainleveState y = painleve_boundary(s_max);
  auto record = [&](double s) {
    sol.s.push_back(s);
    sol.q.push_back(static_cast<double>(y(0)));
    sol.qp.push_back(static_cast<double>(y(1)));
    sol.int_q.push_back(static_cast<double>(y(2)));
    sol.int_q2.push_back(static_cast<double>(y(3)));
    sol.int_weighted.push_back(static_cast<double>(y(4)));
    sol.states.push_back(y);
  };
  record(s_max);
  const long n = static_cast<long>(std::floor((s_max - s_min) / step + 1e-9));
  double s = s_max;
  for (long i = 1; i <= n + 1; ++i) {
    const double next = i <= n ? s_max - i * step : s_min;
    if (next >= s) continue;  // s_min already on the grid
    y = painleve_advance(y, s, next, ctl, &sol.accepted_steps, &sol.rejected_steps);
    s = next;
    record(s);
  }
  return sol;
}

double painleve_residual(const PainleveSolution& sol, std::size_t i, double h) {
  const PainleveState y = sol.states[i];
  const real s = sol.s[i];
  StepControl fine = sol.control;
  fine.max_step = h / 4;
  const real p1 = painleve_advance(y, s, s + h, fine)(1);
  const real p2 = painleve_advance(y, s, s + 2 * h, fine)(1);
  const real m1 = painleve_advance(y, s, s - h, fine)(1);
  const real m2 = painleve_advance(y, s, s - 2 * h, fine)(1);
  const real qpp = (-p2 + 8 * p1 - 8 * m1 + m2) / (12 * h);
  const real q = y(0);
  return static_cast<double>(qpp - s * q - 2 * q * q * q);
}

}  // namespace kpzlab
