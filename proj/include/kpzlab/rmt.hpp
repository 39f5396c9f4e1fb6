#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "kpzlab/rng.hpp"

namespace kpzlab {

/// beta = 1 (real symmetric, GOE) or beta = 2 (complex Hermitian, GUE).
enum class EnsembleKind { GOE = 1, GUE = 2 };

constexpr int beta_of(EnsembleKind k) { return static_cast<int>(k); }

template <class Scalar>
struct EnsembleTraits;

template <>
struct EnsembleTraits<double> {
  static constexpr EnsembleKind kind = EnsembleKind::GOE;
};

template <>
struct EnsembleTraits<std::complex<double>> {
  static constexpr EnsembleKind kind = EnsembleKind::GUE;
};

/// Self-adjoint N x N sample; the scalar type fixes the ensemble.
using RealSymmetric = Eigen::MatrixXd;
using ComplexHermitian = Eigen::MatrixXcd;

struct MatrixSample {
  EnsembleKind kind = EnsembleKind::GUE;
  std::variant<RealSymmetric, ComplexHermitian> entries;

  Eigen::Index size() const;
};

struct SpectrumSample {
  EnsembleKind kind = EnsembleKind::GUE;
  Eigen::Index N = 0;
  Eigen::VectorXd eigenvalues;  ///< ascending
  double edge_value = 0.0;      ///< (lambda_max - 2N) / N^{1/3}
};

struct EdgePath {
  std::vector<double> taus;
  std::vector<double> values;
};

/// Gaussian self-adjoint matrix with the edge of the spectrum at 2N and
/// fluctuations of order N^{1/3}. GUE: diagonal variance N, real and
/// imaginary off-diagonal parts variance N/2 each (density exp(-Tr H^2/2N)).
/// GOE: diagonal variance 2N, off-diagonal variance N.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sample_self_adjoint(Eigen::Index N,
                                                                          CounterRng& rng);

MatrixSample sample_matrix(EnsembleKind kind, Eigen::Index N, Seed seed);

/// Ascending real spectrum. Throws NumericError if the solver does not converge.
Eigen::VectorXd eigenvalues(const MatrixSample& m);

template <class Derived>
Eigen::VectorXd eigenvalues(const Eigen::MatrixBase<Derived>& m);

struct SpectrumCheck {
  double max_residual = 0.0;  ///< max_i ||M v_i - lambda_i v_i||
  double trace_error = 0.0;   ///< |sum lambda_i - Tr M|
  double scale = 0.0;         ///< N * max |entry|
};

/// Full eigen-decomposition check backing the eigenvalue contract.
SpectrumCheck check_spectrum(const MatrixSample& m);

SpectrumSample spectrum(const MatrixSample& m);

/// (lambda_max - 2N) / N^{1/3}.
double edge_rescale(double lambda_max, Eigen::Index N);

/// Exact Ornstein-Uhlenbeck transition of the matrix entries:
/// M' = q M + sqrt(1 - q^2) G with q = exp(-dt / 2N) and G a fresh sample.
MatrixSample dyson_step(const MatrixSample& m, double dt, Seed seed);

/// Edge-rescaled largest eigenvalue at matrix times t_i = 2 tau_i N^{2/3},
/// starting from a stationary sample.
EdgePath top_eigenvalue_path(EnsembleKind kind, Eigen::Index N, std::span<const double> taus,
                             Seed seed);

/// CSV `index,lambda`.
void write_csv(std::ostream& os, const SpectrumSample& s);
/// CSV `tau,edge_value`.
void write_csv(std::ostream& os, const EdgePath& path);

}  // namespace kpzlab
