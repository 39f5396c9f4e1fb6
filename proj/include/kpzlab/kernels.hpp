#pragma once

#include <utility>
#include <variant>

namespace kpzlab {

/// Classical Airy kernel (Ai(b)Ai'(a) - Ai'(b)Ai(a))/(b - a); on the
/// diagonal Ai'(s)^2 - s Ai(s)^2.
double airy_kernel(double s1, double s2);

/// Kernel of B(s): Ai(x + y + s).
double airy_b_kernel(double s, double x, double y);

/// Quadrature resolution for the integral kernels: Gauss-Legendre order per
/// panel. Doubling it is the refinement check.
struct KernelQuadrature {
  int order = 16;
  double tail_tol = 1e-10;
  /// Direct quadrature on [0, near_cut] for integrands in Ai(s - l); the
  /// oscillatory tail beyond it is summed in amplitude-phase form.
  double near_cut = 400.0;
};

/// Extended Airy kernel A(tau2, s2; tau1, s1). For tau2 >= tau1:
/// int_{-inf}^0 e^{l (tau2-tau1)} Ai(s1-l) Ai(s2-l) dl, else minus the same
/// integral over (0, inf).
double extended_airy_kernel(double tau1, double s1, double tau2, double s2,
                            const KernelQuadrature& quad = {});

/// Entry (i, j) in {1,2}^2 of the 2x2 GOE edge kernel.
double goe_kernel_entry(int i, int j, double s1, double s2, const KernelQuadrature& quad = {});

namespace kernel_kind {
struct Airy {
  double s = 0.0;  ///< operator on L^2((s, inf))
};
struct ShiftedAiryB {
  double s = 0.0;  ///< operator on L^2((0, inf))
};
struct GoeEntry {
  int i = 1, j = 1;
};
struct ExtendedAiry {
  double tau1 = 0.0, tau2 = 0.0;
};
}  // namespace kernel_kind

using KernelSpec = std::variant<kernel_kind::Airy, kernel_kind::ShiftedAiryB, kernel_kind::GoeEntry,
                                kernel_kind::ExtendedAiry>;

/// Point evaluation of a KernelSpec at (x, y).
double evaluate(const KernelSpec& kernel, double x, double y);

/// Nystrom Fredholm determinant det(I - K) of a KernelSpec on [a, b],
/// accepted once doubling the node count changes it by less than 1e-8.
double fredholm_det(const KernelSpec& kernel, std::pair<double, double> interval, int n_nodes);

}  // namespace kpzlab
