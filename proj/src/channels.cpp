#include "hybrid/channels.hpp"

#include "hybrid/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hybrid {

namespace {

constexpr double kQuadratureTolerance = 1e-8;

void check_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("loss: transmission must lie in [0, 1], got " + std::to_string(eta));
  }
}

template <typename Evaluate>
DensityOperator averaged(const Evaluate& evaluate, const PhaseNoiseSpec& spec) {
  if (!(spec.sigma >= 0.0)) throw std::invalid_argument("phase noise: sigma must be >= 0");
  if (spec.nodes < 1) throw std::invalid_argument("phase noise: need at least one node");
  if (spec.sigma == 0.0) return evaluate(0.0);
  auto integrate = [&](int count) {
    const QuadratureRule rule = gauss_hermite_normal(count);
    DensityOperator first = evaluate(spec.sigma * rule.nodes(0));
    CMatrix acc = rule.weights(0) * first.matrix();
    for (Index k = 1; k < rule.nodes.size(); ++k) {
      acc += rule.weights(k) * evaluate(spec.sigma * rule.nodes(k)).matrix();
    }
    acc = (acc + acc.adjoint()) / 2.0;
    return DensityOperator(first.space(), std::move(acc));
  };
  DensityOperator coarse = integrate(spec.nodes);
  const DensityOperator fine = integrate(2 * spec.nodes);
  const double change = (coarse.matrix() - fine.matrix()).cwiseAbs().maxCoeff();
  if (change > kQuadratureTolerance) {
    throw QuadratureError("phase noise quadrature not converged (change " + std::to_string(change) + ")");
  }
  return coarse;
}

}  // namespace

std::vector<CMatrix> loss_kraus_operators(double eta, Index dim) {
  check_eta(eta);
  // <n-k| K_k |n> = sqrt(C(n,k)) eta^((n-k)/2) (1-eta)^(k/2): vacuum ancilla, beam splitter, ancilla traced.
  std::vector<CMatrix> kraus;
  for (Index k = 0; k < dim; ++k) {
    CMatrix op = CMatrix::Zero(dim, dim);
    for (Index n = k; n < dim; ++n) {
      const double nn = static_cast<double>(n);
      const double kk = static_cast<double>(k);
      const double log_binom = std::lgamma(nn + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(nn - kk + 1.0);
      const double a = (k == 0 ? 1.0 : std::pow(1.0 - eta, kk / 2.0)) *
                       (n == k ? 1.0 : std::pow(eta, (nn - kk) / 2.0));
      op(n - k, n) = std::exp(0.5 * log_binom) * a;
    }
    kraus.push_back(std::move(op));
  }
  return kraus;
}

DensityOperator loss_channel(const DensityOperator& rho, Index mode, double eta) {
  check_eta(eta);
  if (eta == 1.0) return rho;
  const Index dim = rho.space().dim(mode);
  CMatrix out = CMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const CMatrix& k : loss_kraus_operators(eta, dim)) {
    const CMatrix left = apply_mode_left(rho.matrix(), k, rho.space(), mode);
    out += apply_mode_left(left.adjoint(), k, rho.space(), mode).adjoint();
  }
  if (rho.is_hermitian()) out = (out + out.adjoint()) / 2.0;
  return DensityOperator(rho.space(), std::move(out), rho.is_hermitian());
}

DensityOperator apply_loss(const DensityOperator& rho, const LossSpec& loss) {
  if (rho.space().mode_count() != 2) throw std::invalid_argument("apply_loss: expected two modes");
  return loss_channel(loss_channel(rho, 0, loss.eta_a), 1, loss.eta_b);
}

QuadratureRule gauss_hermite_normal(int count) {
  if (count < 1) throw std::invalid_argument("gauss_hermite_normal: count must be positive");
  // Golub-Welsch on the Jacobi matrix of the probabilists' Hermite polynomials.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(count, count);
  for (int k = 1; k < count; ++k) {
    jacobi(k - 1, k) = jacobi(k, k - 1) = std::sqrt(static_cast<double>(k));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  QuadratureRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights = solver.eigenvectors().row(0).array().square().transpose();
  rule.weights /= rule.weights.sum();
  return rule;
}

DensityOperator phase_noise_average(const std::function<PureState(double)>& builder,
                                    const PhaseNoiseSpec& spec) {
  return averaged(
      [&](double phi) {
        const PureState psi = builder(phi);
        if (!psi.is_normalized(1e-8)) {
          throw std::invalid_argument("phase_noise_average: builder returned an unnormalized state");
        }
        return DensityOperator::projector(psi);
      },
      spec);
}

DensityOperator dephase(const DensityOperator& rho, Index mode, const PhaseNoiseSpec& spec) {
  const Index dim = rho.space().dim(mode);
  return averaged([&](double phi) { return conjugate(rho, phase_rotation(phi, dim), mode); }, spec);
}

}  // namespace hybrid
