#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "kpzlab/errors.hpp"

namespace kpzlab {

/// Gauss-Legendre nodes and weights on [-1, 1].
template <class Scalar = double>
struct GaussLegendre {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nodes;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;

  explicit GaussLegendre(int n) : nodes(n), weights(n) {
    if (n < 1) throw InvalidParameter("GaussLegendre: need at least one node");
    for (int i = 0; i < (n + 1) / 2; ++i) {
      Scalar x = std::cos(std::numbers::pi_v<Scalar> * (i + Scalar(0.75)) / (n + Scalar(0.5)));
      Scalar dp = 0;
      for (int it = 0; it < 100; ++it) {
        Scalar p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const Scalar pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        if (n == 1) p0 = 1;
        dp = n * (x * p1 - p0) / (x * x - 1);
        const Scalar dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) <= 4 * std::numeric_limits<Scalar>::epsilon()) {
          // one more evaluation at the converged node for the weight
          p0 = 1;
          p1 = x;
          for (int k = 2; k <= n; ++k) {
            const Scalar pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = pk;
          }
          if (n == 1) p0 = 1;
          dp = n * (x * p1 - p0) / (x * x - 1);
          break;
        }
      }
      nodes(i) = -x;
      nodes(n - 1 - i) = x;
      weights(i) = weights(n - 1 - i) = 2 / ((1 - x * x) * dp * dp);
    }
    if (n % 2 == 1) nodes((n - 1) / 2) = 0;
  }

  /// Nodes and weights mapped affinely onto [a, b].
  void map_to(Scalar a, Scalar b, Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x,
              Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& w) const {
    const Scalar half = (b - a) / 2, mid = (a + b) / 2;
    x = (mid + half * nodes.array()).matrix();
    w = half * weights;
  }

  template <class F>
  Scalar integrate(F&& f, Scalar a, Scalar b) const {
    const Scalar half = (b - a) / 2, mid = (a + b) / 2;
    Scalar sum = 0;
    for (Eigen::Index i = 0; i < nodes.size(); ++i) sum += weights(i) * f(mid + half * nodes(i));
    return half * sum;
  }
};

/// Composite Gauss-Legendre over [a, b] with panel widths chosen by
/// `width(x)` at the left end of each panel.
template <class F, class Width, class Scalar = double>
Scalar integrate_panels(F&& f, Scalar a, Scalar b, Width&& width, const GaussLegendre<Scalar>& rule) {
  Scalar sum = 0;
  Scalar x = a;
  while (x < b) {
    const Scalar h = width(x);
    if (!(h > 0)) throw NumericError("integrate_panels: non-positive panel width");
    const Scalar x1 = std::min(b, x + h);
    sum += rule.integrate(f, x, x1);
    x = x1;
  }
  return sum;
}

}  // namespace kpzlab
