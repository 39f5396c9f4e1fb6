#pragma once

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "kpzlab/errors.hpp"
#include "kpzlab/quadrature.hpp"

namespace kpzlab {

/// Nystrom discretization det(I - W^{1/2} K W^{1/2}) on [a, b] with n
/// Gauss-Legendre nodes.
template <class Kernel, class Scalar = double>
Scalar fredholm_det_fixed(Kernel&& kernel, Scalar a, Scalar b, int n) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const GaussLegendre<Scalar> rule(n);
  Vec x, w;
  rule.map_to(a, b, x, w);
  const Vec sw = w.cwiseSqrt();
  Mat m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = -sw(i) * kernel(x(i), x(j)) * sw(j);
  m.diagonal().array() += Scalar(1);
  return m.partialPivLu().determinant();
}

struct FredholmResult {
  double value = 0.0;
  int nodes = 0;
  double last_change = 0.0;
};

/// Doubles the node count from n_nodes until two successive values differ by
/// less than tol; throws NumericError past max_nodes.
template <class Kernel>
FredholmResult fredholm_det_converged(Kernel&& kernel, double a, double b, int n_nodes,
                                      double tol = 1e-8, int max_nodes = 1024) {
  if (n_nodes < 10) throw InvalidParameter("fredholm_det: need at least 10 nodes");
  if (!(a < b)) throw InvalidParameter("fredholm_det: empty interval");
  double prev = fredholm_det_fixed(kernel, a, b, n_nodes);
  for (int n = 2 * n_nodes; n <= max_nodes; n *= 2) {
    const double cur = fredholm_det_fixed(kernel, a, b, n);
    if (std::abs(cur - prev) < tol) return {cur, n, std::abs(cur - prev)};
    prev = cur;
  }
  throw NumericError("fredholm_det: no convergence under node doubling up to " +
                     std::to_string(max_nodes) + " nodes");
}

}  // namespace kpzlab
