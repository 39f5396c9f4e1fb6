#include "kpzlab/rmt.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include "kpzlab/errors.hpp"

namespace kpzlab {

namespace {

void fill(Eigen::MatrixXd& h, Eigen::Index N, CounterRng& rng) {
  const double n = static_cast<double>(N);
  std::normal_distribution<double> diag(0.0, std::sqrt(2.0 * n));
  std::normal_distribution<double> off(0.0, std::sqrt(n));
  for (Eigen::Index j = 0; j < N; ++j) {
    h(j, j) = diag(rng);
    for (Eigen::Index i = j + 1; i < N; ++i) h(j, i) = h(i, j) = off(rng);
  }
}

void fill(Eigen::MatrixXcd& h, Eigen::Index N, CounterRng& rng) {
  const double n = static_cast<double>(N);
  std::normal_distribution<double> diag(0.0, std::sqrt(n));
  std::normal_distribution<double> off(0.0, std::sqrt(0.5 * n));
  for (Eigen::Index j = 0; j < N; ++j) {
    h(j, j) = diag(rng);
    for (Eigen::Index i = j + 1; i < N; ++i) {
      const double re = off(rng);
      const double im = off(rng);
      h(i, j) = {re, im};
      h(j, i) = {re, -im};
    }
  }
}

template <class Mat>
Eigen::VectorXd solve_values(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("eigenvalues: self-adjoint solver did not converge (N = " +
                       std::to_string(m.rows()) + ")");
  return solver.eigenvalues();
}

}  // namespace

template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sample_self_adjoint(Eigen::Index N,
                                                                          CounterRng& rng) {
  if (N < 1) throw InvalidParameter("sample_matrix: N must be positive");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> h(N, N);
  fill(h, N, rng);
  return h;
}

template Eigen::MatrixXd sample_self_adjoint<double>(Eigen::Index, CounterRng&);
template Eigen::MatrixXcd sample_self_adjoint<std::complex<double>>(Eigen::Index, CounterRng&);

Eigen::Index MatrixSample::size() const {
  return std::visit([](const auto& m) { return m.rows(); }, entries);
}

MatrixSample sample_matrix(EnsembleKind kind, Eigen::Index N, Seed seed) {
  CounterRng rng(seed);
  if (kind == EnsembleKind::GOE) return {kind, sample_self_adjoint<double>(N, rng)};
  return {kind, sample_self_adjoint<std::complex<double>>(N, rng)};
}

template <class Derived>
Eigen::VectorXd eigenvalues(const Eigen::MatrixBase<Derived>& m) {
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  return solve_values<Mat>(m.derived());
}

template Eigen::VectorXd eigenvalues(const Eigen::MatrixBase<Eigen::MatrixXd>&);
template Eigen::VectorXd eigenvalues(const Eigen::MatrixBase<Eigen::MatrixXcd>&);

Eigen::VectorXd eigenvalues(const MatrixSample& m) {
  return std::visit([](const auto& h) { return solve_values(h); }, m.entries);
}

SpectrumCheck check_spectrum(const MatrixSample& m) {
  return std::visit(
      [](const auto& h) {
        using Mat = std::decay_t<decltype(h)>;
        Eigen::SelfAdjointEigenSolver<Mat> solver(h, Eigen::ComputeEigenvectors);
        if (solver.info() != Eigen::Success)
          throw NumericError("check_spectrum: self-adjoint solver did not converge");
        const auto& vals = solver.eigenvalues();
        const auto& vecs = solver.eigenvectors();
        SpectrumCheck c;
        for (Eigen::Index i = 0; i < vals.size(); ++i)
          c.max_residual =
              std::max(c.max_residual, (h * vecs.col(i) - vals(i) * vecs.col(i)).norm());
        c.trace_error = std::abs(vals.sum() - std::real(h.trace()));
        c.scale = static_cast<double>(h.rows()) * h.cwiseAbs().maxCoeff();
        return c;
      },
      m.entries);
}

SpectrumSample spectrum(const MatrixSample& m) {
  SpectrumSample s{m.kind, m.size(), eigenvalues(m), 0.0};
  s.edge_value = edge_rescale(s.eigenvalues(s.N - 1), s.N);
  return s;
}

double edge_rescale(double lambda_max, Eigen::Index N) {
  if (N < 1) throw InvalidParameter("edge_rescale: N must be positive");
  const double n = static_cast<double>(N);
  return (lambda_max - 2.0 * n) / std::cbrt(n);
}

MatrixSample dyson_step(const MatrixSample& m, double dt, Seed seed) {
  if (!(dt >= 0.0)) throw InvalidParameter("dyson_step: dt must be non-negative");
  const double n = static_cast<double>(m.size());
  const double q = std::exp(-dt / (2.0 * n));
  const double noise = std::sqrt(-std::expm1(-dt / n));  // sqrt(1 - q^2)
  CounterRng rng(seed);
  return std::visit(
      [&](const auto& h) -> MatrixSample {
        using Scalar = typename std::decay_t<decltype(h)>::Scalar;
        auto g = sample_self_adjoint<Scalar>(h.rows(), rng);
        if (dt == 0.0) return {m.kind, h};
        return {m.kind, (q * h + noise * g).eval()};
      },
      m.entries);
}

EdgePath top_eigenvalue_path(EnsembleKind kind, Eigen::Index N, std::span<const double> taus,
                             Seed seed) {
  if (taus.empty()) throw InvalidParameter("top_eigenvalue_path: need at least one tau");
  if (taus.front() < 0.0) throw InvalidParameter("top_eigenvalue_path: taus must be >= 0");
  for (std::size_t i = 1; i < taus.size(); ++i)
    if (!(taus[i] > taus[i - 1]))
      throw InvalidParameter("top_eigenvalue_path: taus must be strictly increasing");

  const double time_scale = 2.0 * std::pow(static_cast<double>(N), 2.0 / 3.0);
  EdgePath path{{taus.begin(), taus.end()}, {}};
  MatrixSample m = sample_matrix(kind, N, seed);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (i > 0) m = dyson_step(m, time_scale * (taus[i] - taus[i - 1]), seed.with_stream(seed.stream + i));
    const Eigen::VectorXd ev = eigenvalues(m);
    path.values.push_back(edge_rescale(ev(ev.size() - 1), N));
  }
  return path;
}

void write_csv(std::ostream& os, const SpectrumSample& s) {
  os << "index,lambda\n" << std::setprecision(17);
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) os << i << ',' << s.eigenvalues(i) << '\n';
}

void write_csv(std::ostream& os, const EdgePath& path) {
  os << "tau,edge_value\n" << std::setprecision(17);
  for (std::size_t i = 0; i < path.taus.size(); ++i)
    os << path.taus[i] << ',' << path.values[i] << '\n';
}

}  // namespace kpzlab
