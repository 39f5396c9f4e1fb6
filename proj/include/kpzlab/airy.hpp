#pragma once

#include <complex>

namespace kpzlab {

/// Ai and Ai' at one point. `in_window` is false outside [-12, 12], where the
/// absolute accuracy guarantee of 1e-9 is not asserted.
struct AiryValue {
  double ai = 0.0;
  double aip = 0.0;
  bool in_window = true;
};

/// Maclaurin series (extended precision) for |x| <= 8, asymptotic
/// expansions beyond.
AiryValue airy(double x);

inline double airy_ai(double x) { return airy(x).ai; }
inline double airy_ai_prime(double x) { return airy(x).aip; }

/// Both evaluation routes, exposed for cross-validation at the switchover.
AiryValue airy_series(double x);
AiryValue airy_asymptotic(double x);

/// Switchover radius between series and asymptotic expansions.
inline constexpr double kAirySwitch = 8.0;

/// int_x^inf Ai(t) dt.
double airy_integral_right(double x);

/// int_{-inf}^x Ai(t) dt = 1 - airy_integral_right(x).
double airy_integral_left(double x);

/// Amplitude-phase form on the far negative axis, z >= 20:
/// Ai(-z) = Im(a e^{i phase}), Ai'(-z) = Re(b e^{i phase}),
/// int_{-inf}^{-z} Ai = Im(c e^{i phase}), phase = (2/3) z^{3/2} + pi/4.
struct AiryOscillatory {
  double phase = 0.0;
  std::complex<double> a, b, c;
};
AiryOscillatory airy_oscillatory(double z);

}  // namespace kpzlab
