#include "kpzlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "kpzlab/airy.hpp"
#include "kpzlab/errors.hpp"
#include "kpzlab/fredholm.hpp"
#include "kpzlab/quadrature.hpp"

namespace kpzlab {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Ai(x)^2 < 1e-100 past this point.
constexpr double kDecayCut = 24.0;
constexpr int kMaxTailPanels = 4000;

void check_quadrature(const KernelQuadrature& q) {
  if (q.order < 4 || !(q.tail_tol > 0) || !(q.near_cut >= 100.0))
    throw InvalidParameter("kernel quadrature: order >= 4, tail_tol > 0, near_cut >= 100");
}

void check_domain(double s, const char* who) {
  if (!std::isfinite(s) || s < -8.0)
    throw InvalidParameter(std::string(who) + ": argument must be finite and >= -8");
}

// Panel width for integrands in Ai(s - l): ~4 radians of the fastest phase.
double oscillatory_width(double l, double s_max) {
  const double z = l - s_max;
  return z > 4.0 ? 2.0 / std::sqrt(z) : 0.5;
}

double wynn_epsilon(const std::vector<double>& s) {
  const std::size_t n = s.size();
  if (n == 0) return 0.0;
  double best = s.back();
  std::vector<double> prev(n + 1, 0.0), cur(s);
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0) return best;
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    if (k % 2 == 0 && !next.empty() && std::isfinite(next.back())) best = next.back();
    prev = std::move(cur);
    cur = std::move(next);
  }
  return best;
}

// (2/3)(z1^{3/2} - z2^{3/2}) without cancellation.
double phase_difference(double z1, double z2) {
  const double r1 = std::sqrt(z1), r2 = std::sqrt(z2);
  return 2.0 / 3.0 * (z1 - z2) * (z1 + r1 * r2 + z2) / (r1 + r2);
}

// int_{l0}^inf of an integrand whose slowly varying part is
// slow(l) ~ sin/cos((s2 - s1) sqrt l)/l^p times exp(damp * l), after the fast
// part Re(phi(l) e^{i(phase1+phase2)}) has been split off. The slow part is
// summed over half periods in u = sqrt(l) with Wynn acceleration; the fast
// part by one integration by parts.
template <class Slow, class Fast>
double oscillatory_tail(double l0, double s1, double s2, double damp, Slow&& slow, Fast&& fast,
                        const KernelQuadrature& quad) {
  const GaussLegendre<double> rule(quad.order);
  const double d = std::abs(s2 - s1);
  const double half_period = d > 0 ? kPi / d : 1.0;
  const auto f = [&](double u) {
    const double l = u * u;
    return 2.0 * u * slow(l) * std::exp(damp * l);
  };
  std::vector<double> partial;
  double u = std::sqrt(l0), sum = 0.0, last = NAN, prev_last = NAN;
  for (int k = 0; k < kMaxTailPanels; ++k) {
    const int pieces = std::max(1, static_cast<int>(std::ceil(half_period / (0.25 * u))));
    const double w = half_period / pieces;
    for (int p = 0; p < pieces; ++p) {
      sum += rule.integrate(f, u, u + w);
      u += w;
    }
    partial.push_back(sum);
    if (partial.size() > 24) partial.erase(partial.begin());
    const double est = partial.size() >= 3 ? wynn_epsilon(partial) : sum;
    const double tol = 0.01 * quad.tail_tol;
    const bool damped_out = damp < 0 && std::exp(damp * u * u) < 1e-3 * quad.tail_tol;
    if (k >= 6 && std::abs(est - last) < tol && std::abs(last - prev_last) < tol) {
      sum = est;
      break;
    }
    if (damped_out) {
      sum = partial.back();
      break;
    }
    prev_last = last;
    last = est;
    if (k + 1 == kMaxTailPanels)
      throw NumericError("kernel quadrature: oscillatory tail did not converge");
  }

  const double z1 = l0 - s1, z2 = l0 - s2;
  const AiryOscillatory o1 = airy_oscillatory(z1), o2 = airy_oscillatory(z2);
  const cplx phi = fast(o1, o2);
  const double total_phase = o1.phase + o2.phase;
  const cplx rate(damp, std::sqrt(z1) + std::sqrt(z2));
  const cplx boundary = -phi * std::exp(cplx(damp * l0, total_phase)) / rate;
  return sum + boundary.real();
}

double k11(double s1, double s2, const KernelQuadrature& quad) {
  if (s1 == s2) return 0.0;
  if (s1 > s2) return -k11(s2, s1, quad);
  const GaussLegendre<double> rule(quad.order);
  const double upper = kDecayCut - std::min(s1, s2);
  const auto g = [&](double l) {
    const AiryValue a = airy(s1 + l), b = airy(s2 + l);
    return a.ai * b.aip - b.ai * a.aip;
  };
  return integrate_panels(g, 0.0, upper, [](double) { return 0.5; }, rule);
}

double k12(double s1, double s2, const KernelQuadrature& quad) {
  const GaussLegendre<double> rule(quad.order);
  const double upper = kDecayCut - std::min(s1, s2);
  const auto g = [&](double l) { return airy(s1 + l).ai * airy(s2 + l).ai; };
  const double first = integrate_panels(g, 0.0, upper, [](double) { return 0.5; }, rule);
  return first + 0.5 * airy_ai(s1) * airy_integral_left(s2);
}

double k22(double s1, double s2, const KernelQuadrature& quad) {
  if (s1 == s2) return 0.0;
  if (s1 > s2) return -k22(s2, s1, quad);
  const GaussLegendre<double> rule(quad.order);
  const double s_max = std::max(s1, s2);
  const auto g = [&](double l) {
    return airy(s1 - l).ai * airy_integral_left(s2 - l) -
           airy(s2 - l).ai * airy_integral_left(s1 - l);
  };
  const double near = integrate_panels(
      g, 0.0, quad.near_cut, [s_max](double l) { return oscillatory_width(l, s_max); }, rule);
  const auto slow = [&](double l) {
    const AiryOscillatory o1 = airy_oscillatory(l - s1), o2 = airy_oscillatory(l - s2);
    const cplx e = std::polar(1.0, phase_difference(l - s1, l - s2));
    return 0.5 * ((o1.a * std::conj(o2.c) * e).real() - (o2.a * std::conj(o1.c) * std::conj(e)).real());
  };
  const auto fast = [](const AiryOscillatory& o1, const AiryOscillatory& o2) {
    return 0.5 * (o2.a * o1.c - o1.a * o2.c);
  };
  const double tail = oscillatory_tail(quad.near_cut, s1, s2, 0.0, slow, fast, quad);
  return 0.25 * (near + tail);
}

}  // namespace

double airy_kernel(double s1, double s2) {
  const double eps = s2 - s1;
  if (std::abs(eps) < 1e-4) {
    const AiryValue a = airy(s1);
    const double A = a.ai, Ap = a.aip, s = s1;
    return (Ap * Ap - s * A * A) - 0.5 * eps * A * A +
           eps * eps * (s * Ap * Ap - A * Ap - s * s * A * A) / 6.0;
  }
  const AiryValue a = airy(s1), b = airy(s2);
  return (b.ai * a.aip - b.aip * a.ai) / (s2 - s1);
}

double airy_b_kernel(double s, double x, double y) { return airy_ai(x + y + s); }

double extended_airy_kernel(double tau1, double s1, double tau2, double s2,
                            const KernelQuadrature& quad) {
  check_quadrature(quad);
  check_domain(s1, "extended_airy_kernel");
  check_domain(s2, "extended_airy_kernel");
  if (!std::isfinite(tau1) || !std::isfinite(tau2))
    throw InvalidParameter("extended_airy_kernel: non-finite time");
  const double dt = tau2 - tau1;
  const GaussLegendre<double> rule(quad.order);
  if (dt >= 0) {
    const double upper = kDecayCut - std::min(s1, s2);
    const auto g = [&](double u) {
      return std::exp(-u * dt) * airy(s1 + u).ai * airy(s2 + u).ai;
    };
    return integrate_panels(g, 0.0, upper, [](double) { return 0.5; }, rule);
  }
  // |Ai(-x)|^2 <= 1/pi, so the tail past L is below exp(dt L)/(pi |dt|).
  const double cut = std::log(1.0 / (quad.tail_tol * kPi * -dt)) / -dt;
  const double s_max = std::max(s1, s2);
  const auto g = [&](double l) {
    return std::exp(l * dt) * airy(s1 - l).ai * airy(s2 - l).ai;
  };
  const auto width = [s_max](double l) { return oscillatory_width(l, s_max); };
  if (cut <= quad.near_cut) return -integrate_panels(g, 0.0, std::max(cut, 1.0), width, rule);
  const double near = integrate_panels(g, 0.0, quad.near_cut, width, rule);
  const auto slow = [&](double l) {
    const AiryOscillatory o1 = airy_oscillatory(l - s1), o2 = airy_oscillatory(l - s2);
    const cplx e = std::polar(1.0, phase_difference(l - s1, l - s2));
    return 0.5 * (o1.a * std::conj(o2.a) * e).real();
  };
  const auto fast = [](const AiryOscillatory& o1, const AiryOscillatory& o2) {
    return -0.5 * o1.a * o2.a;
  };
  return -(near + oscillatory_tail(quad.near_cut, s1, s2, dt, slow, fast, quad));
}

double goe_kernel_entry(int i, int j, double s1, double s2, const KernelQuadrature& quad) {
  check_quadrature(quad);
  check_domain(s1, "goe_kernel_entry");
  check_domain(s2, "goe_kernel_entry");
  if (i == 1 && j == 1) return k11(s1, s2, quad);
  if (i == 1 && j == 2) return k12(s1, s2, quad);
  if (i == 2 && j == 1) return -k12(s2, s1, quad);
  if (i == 2 && j == 2) return k22(s1, s2, quad);
  throw InvalidParameter("goe_kernel_entry: indices must be 1 or 2");
}

double evaluate(const KernelSpec& kernel, double x, double y) {
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, kernel_kind::Airy>) return airy_kernel(x, y);
        else if constexpr (std::is_same_v<K, kernel_kind::ShiftedAiryB>) return airy_b_kernel(k.s, x, y);
        else if constexpr (std::is_same_v<K, kernel_kind::GoeEntry>) return goe_kernel_entry(k.i, k.j, x, y);
        else return extended_airy_kernel(k.tau1, x, k.tau2, y);
      },
      kernel);
}

double fredholm_det(const KernelSpec& kernel, std::pair<double, double> interval, int n_nodes) {
  return fredholm_det_converged([&](double x, double y) { return evaluate(kernel, x, y); },
                                interval.first, interval.second, n_nodes)
      .value;
}

}  // namespace kpzlab
