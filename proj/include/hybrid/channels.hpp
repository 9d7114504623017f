#ifndef HYBRID_CHANNELS_HPP
#define HYBRID_CHANNELS_HPP

#include "hybrid/fock_space.hpp"

#include <functional>
#include <vector>

namespace hybrid {

/// Intensity transmissions of the DV (A) and CV (B) modes.
struct LossSpec {
  double eta_a = 1.0;
  double eta_b = 1.0;

  static LossSpec symmetric(double eta) { return {eta, eta}; }
  bool lossless() const { return eta_a == 1.0 && eta_b == 1.0; }
};

/// Gaussian phase noise with standard deviation sigma (radians).
struct PhaseNoiseSpec {
  double sigma = 0.0;
  int nodes = 21;
};

/// Kraus operators of the pure-loss channel, read off a beam splitter with
/// cos^2(theta) = eta acting on the mode and a vacuum ancilla.
std::vector<CMatrix> loss_kraus_operators(double eta, Index dim);

DensityOperator loss_channel(const DensityOperator& rho, Index mode, double eta);

/// Loss on modes 0 (eta_a) and 1 (eta_b) of a two-mode operator.
DensityOperator apply_loss(const DensityOperator& rho, const LossSpec& loss);

/// Gauss-Hermite nodes and weights for the standard normal distribution
/// (weights sum to one).
struct QuadratureRule {
  RVector nodes;
  RVector weights;
};
QuadratureRule gauss_hermite_normal(int count);

/// Raised when doubling the quadrature order moves the result by more than 1e-8.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// rho = E_phi[|psi(phi)><psi(phi)|] with phi ~ N(0, sigma^2).
DensityOperator phase_noise_average(const std::function<PureState(double)>& builder,
                                    const PhaseNoiseSpec& spec);

/// Same average applied to a mixed state through exp(i phi n) on one mode.
DensityOperator dephase(const DensityOperator& rho, Index mode, const PhaseNoiseSpec& spec);

}  // namespace hybrid

#endif  // HYBRID_CHANNELS_HPP
