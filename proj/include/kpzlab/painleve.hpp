#pragma once

#include <vector>

#include <Eigen/Dense>

namespace kpzlab {

/// Error control of the embedded Runge-Kutta integrator.
struct StepControl {
  double rtol = 1e-18;
  double atol = 1e-60;
  double max_step = 0.05;
};

/// State carried from right to left: q, q', and the tail integrals
/// int_s^inf q, int_s^inf q^2, int_s^inf (x - s) q^2. Extended precision:
/// the Hastings-McLeod branch is a separatrix and rounding errors are
/// amplified like exp((2 sqrt 2 / 3) |s|^{3/2}) on the left.
using PainleveState = Eigen::Matrix<long double, 5, 1>;

/// Seed point of the integration; the asymptotic data q = Ai is accurate to
/// extended precision there.
inline constexpr double kPainleveSeed = 12.0;

/// Hastings-McLeod solution of q'' = s q + 2 q^3, q ~ Ai at +infinity,
/// integrated right to left on a descending grid.
struct PainleveSolution {
  std::vector<double> s;   ///< descending, s.front() = s_max
  std::vector<double> q;
  std::vector<double> qp;
  std::vector<double> int_q;         ///< int_s^inf q
  std::vector<double> int_q2;        ///< int_s^inf q^2
  std::vector<double> int_weighted;  ///< int_s^inf (x - s) q^2
  std::vector<PainleveState> states;  ///< full-precision state per node
  StepControl control;
  long accepted_steps = 0;
  long rejected_steps = 0;
};

/// State at s0 (>= 6). Seeded with q = Ai at max(s0, kPainleveSeed), where
/// the O(Ai^3) correction is below extended precision.
PainleveState painleve_boundary(double s0);

/// Integrates the augmented system from `from` to `to` (either direction).
PainleveState painleve_advance(PainleveState y, double from, double to, const StepControl& ctl,
                               long* accepted = nullptr, long* rejected = nullptr);

/// Solves from s_max (>= 6) down to s_min (>= -10), recording every `step`.
/// Throws NumericError if |q| exceeds 1e6.
PainleveSolution painleve2_solve(double s_max, double s_min, double step = 0.05,
                                 const StepControl& ctl = {});

/// q'' - s q - 2 q^3 at node i, with q'' re-derived by a five-point central
/// difference of q' from short local integrations.
double painleve_residual(const PainleveSolution& sol, std::size_t i, double h = 1e-3);

}  // namespace kpzlab
