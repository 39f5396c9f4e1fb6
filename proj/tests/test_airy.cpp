#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "kpzlab/airy.hpp"
#include "kpzlab/quadrature.hpp"

using namespace kpzlab;

namespace {

// Ai(x) = (1/pi) Im[ w int_0^inf exp(-r^3/3 - x r w) dr ], w = e^{i pi/3},
// obtained by rotating the Airy contour integral onto the ray arg t = pi/3.
// The derivative carries an extra factor -t = -r w.
std::pair<double, double> airy_by_contour(double x) {
  using C = std::complex<double>;
  const C w = std::polar(1.0, std::numbers::pi / 3);
  const GaussLegendre<double> rule(40);
  C ai = 0, aip = 0;
  for (double a = 0; a < 12; a += 0.25) {
    ai += C(rule.integrate([&](double r) { return (w * std::exp(-r * r * r / 3 - x * r * w)).real(); }, a, a + 0.25),
            rule.integrate([&](double r) { return (w * std::exp(-r * r * r / 3 - x * r * w)).imag(); }, a, a + 0.25));
    aip += C(rule.integrate([&](double r) { return (-r * w * w * std::exp(-r * r * r / 3 - x * r * w)).real(); }, a, a + 0.25),
             rule.integrate([&](double r) { return (-r * w * w * std::exp(-r * r * r / 3 - x * r * w)).imag(); }, a, a + 0.25));
  }
  return {ai.imag() / std::numbers::pi, aip.imag() / std::numbers::pi};
}

}  // namespace

TEST_CASE("Ai at the origin matches the closed form and the contour integral") {
  const double closed = 1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0));
  CHECK(airy_ai(0.0) == doctest::Approx(closed).epsilon(1e-14));
  const auto [ai, aip] = airy_by_contour(0.0);
  CHECK(std::abs(airy_ai(0.0) - ai) < 1e-9);
  CHECK(std::abs(airy_ai_prime(0.0) - aip) < 1e-9);
  CHECK(airy_ai_prime(0.0) == doctest::Approx(-0.2588194037928068).epsilon(1e-14));
}

TEST_CASE("Ai and Ai' agree with the contour integral across the window") {
  for (double x = -12.0; x <= 12.0; x += 0.37) {
    const auto [ai, aip] = airy_by_contour(x);
    INFO("x = " << x);
    CHECK(std::abs(airy_ai(x) - ai) < 1e-9);
    CHECK(std::abs(airy_ai_prime(x) - aip) < 1e-9);
  }
}

TEST_CASE("tabulated values") {
  CHECK(airy_ai(1.0) == doctest::Approx(0.1352924163128814).epsilon(1e-13));
  CHECK(airy_ai(2.0) == doctest::Approx(0.03492413042327437).epsilon(1e-13));
  CHECK(airy_ai(-2.0) == doctest::Approx(0.2274074282016856).epsilon(1e-12));
}

TEST_CASE("series and asymptotic routes agree at the switchover") {
  for (double x : {-kAirySwitch, kAirySwitch, -7.5, 7.5, -9.0, 9.0}) {
    const AiryValue s = airy_series(x), a = airy_asymptotic(x);
    INFO("x = " << x);
    CHECK(std::abs(s.ai - a.ai) < 1e-11);
    CHECK(std::abs(s.aip - a.aip) < 1e-11);
  }
}

TEST_CASE("defining equation Ai'' = x Ai by finite differences") {
  const double h = 1e-3;
  for (double x : {-2.0, 0.0, 3.0}) {
    const double d2 = (airy_ai(x + h) - 2 * airy_ai(x) + airy_ai(x - h)) / (h * h);
    CHECK(std::abs(d2 - x * airy_ai(x)) < 1e-6);
  }
}

TEST_CASE("Ai is positive and decreasing on [0, 12]") {
  double prev = airy_ai(0.0);
  for (double x = 0.01; x <= 12.0; x += 0.01) {
    const double v = airy_ai(x);
    REQUIRE(v > 0.0);
    REQUIRE(v < prev);
    prev = v;
  }
}

TEST_CASE("window flag") {
  CHECK(airy(11.9).in_window);
  CHECK_FALSE(airy(12.5).in_window);
  CHECK_FALSE(airy(-13.0).in_window);
}

TEST_CASE("integrals of Ai") {
  CHECK(airy_integral_right(0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(airy_integral_left(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  const GaussLegendre<double> rule(30);
  for (double x : {-25.0, -19.5, -7.3, 2.2}) {
    // int_x^0 Ai by fine panels, signed
    double part = 0.0;
    const double lo = std::min(x, 0.0), hi = std::max(x, 0.0);
    for (double a = lo; a < hi; a += 0.25) part += rule.integrate([](double t) { return airy_ai(t); }, a, std::min(hi, a + 0.25));
    if (x > 0) part = -part;
    INFO("x = " << x);
    CHECK(std::abs(airy_integral_right(x) - (1.0 / 3.0 + part)) < 1e-11);
  }
  CHECK(airy_integral_right(50.0) == 0.0);
}

TEST_CASE("amplitude-phase form on the far negative axis") {
  for (double z : {20.5, 40.0, 123.4, 400.0}) {
    const AiryOscillatory o = airy_oscillatory(z);
    const std::complex<double> e = std::polar(1.0, o.phase);
    INFO("z = " << z);
    CHECK(std::abs((o.a * e).imag() - airy_ai(-z)) < 1e-12);
    CHECK(std::abs((o.b * e).real() - airy_ai_prime(-z)) < 1e-11);
    CHECK(std::abs((o.c * e).imag() - airy_integral_left(-z)) < 1e-12);
  }
}
