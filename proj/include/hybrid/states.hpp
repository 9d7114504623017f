#ifndef HYBRID_STATES_HPP
#define HYBRID_STATES_HPP

#include "hybrid/fock_space.hpp"

namespace hybrid {

enum class CatParity { even, odd };

/// Single-mode squeeze parameter. Decibels follow the quadrature-variance
/// convention, db = (20 / ln 10) * zeta.
class SqueezeParam {
 public:
  SqueezeParam() = default;
  explicit SqueezeParam(double zeta);
  static SqueezeParam from_db(double db);

  double zeta() const { return zeta_; }
  double db() const;
  /// 1 / (sqrt(2) tanh zeta); infinite at zeta = 0.
  double c() const;

 private:
  double zeta_ = 0.0;
};

/// Two-mode squeezed vacuum gain, lambda in [0, 1).
class TmssParam {
 public:
  explicit TmssParam(double lambda_gain);
  double lambda_gain() const { return lambda_; }

 private:
  double lambda_;
};

enum class TmssOrder { first, second, exact };

// Tail-mass thresholds enforced by the constructors below.
inline constexpr double kCoherentTailLimit = 1e-10;
inline constexpr double kSqueezedTailLimit = 1e-8;

/// Probability mass of |alpha> above the cutoff.
double coherent_tail_mass(double alpha, Index dim);
/// Probability mass of S(zeta)|0> above the cutoff.
double squeezed_vacuum_tail_mass(double zeta, Index dim);
/// Smallest cutoff (>= floor) whose tail passes the limit above.
Index coherent_cutoff(double alpha, Index floor = 2);
Index squeezed_cutoff(double zeta, Index floor = 2);

PureState vacuum(Index dim);
PureState fock_state(Index n, Index dim);
PureState coherent_state(double alpha, Index dim);
PureState cat_state(double alpha, CatParity parity, Index dim);

/// Cat normalization N_+- = sqrt(2 (1 +- exp(-2 alpha^2))).
double cat_normalization(double alpha, CatParity parity);

/// a on `mode`; the result is unnormalized and norm_weight holds ||a psi||.
PureState annihilate(const PureState& state, Index mode);

/// S(zeta) = exp(zeta/2 (a^dag^2 - a^2)), so that S^dag a S = a cosh + a^dag sinh
/// and S|0> has positive amplitudes. Built on an enlarged space and cropped.
CMatrix squeeze_unitary(SqueezeParam zeta, Index dim);

/// |0PS>, |1PS>, |2PS>: vacuum squeezed state with 0, 1 or 2 photons subtracted.
PureState subtracted_squeezed(int n_subtract, SqueezeParam zeta, Index dim);

/// exp(theta (x y^dag - x^dag y)) * exp(i phi1 n_x + i phi2 n_y) on modes (x, y),
/// i.e. x^dag -> e^{i phi1}(t x^dag + r y^dag), y^dag -> e^{i phi2}(t y^dag - r x^dag)
/// with t = cos theta, r = sin theta. Exact on every block of total photon
/// number below min(dim_x, dim_y).
CMatrix beam_splitter_unitary(double theta, double phi1, double phi2, Index dim_x, Index dim_y);

/// Displacement D(beta) built on an enlarged space and cropped.
CMatrix displacement_operator(Complex beta, Index dim);

/// exp(i phi n).
CMatrix phase_rotation(double phi, Index dim);

PureState tmss_state(TmssParam lambda, TmssOrder order, Index dim, bool normalize = true);

}  // namespace hybrid

#endif  // HYBRID_STATES_HPP
