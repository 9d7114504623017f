#ifndef HYBRID_SCHEMES_HPP
#define HYBRID_SCHEMES_HPP

#include "hybrid/channels.hpp"
#include "hybrid/states.hpp"

#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace hybrid {

/// CV resource on Bob's side: an even cat state or a squeezed vacuum.
class SourceSpec {
 public:
  enum class Kind { cat, squeezed };

  static SourceSpec cat(double alpha) { return SourceSpec(Kind::cat, alpha); }
  static SourceSpec squeezed(SqueezeParam zeta) { return SourceSpec(Kind::squeezed, zeta.zeta()); }

  Kind kind() const { return kind_; }
  double alpha() const;
  SqueezeParam squeeze() const;

 private:
  SourceSpec(Kind kind, double value) : kind_(kind), value_(value) {}
  Kind kind_;
  double value_;
};

struct SchemeParams {
  SourceSpec source = SourceSpec::squeezed(SqueezeParam::from_db(3.0));
  double tap_theta = 0.05;   // Bob's subtraction beam splitter
  double tap_theta0 = 0.05;  // local subtraction, enhanced scheme only
  double tmss_lambda = 0.05;
  double central_r = std::numbers::sqrt2 / 2.0;  // amplitude reflectivity
  double delta_phi = std::numbers::pi;
  LossSpec loss;
  PhaseNoiseSpec phase_noise;
};

enum class Scheme { qubit, enhanced, qutrit };

std::string to_string(Scheme scheme);

/// Modes are (A: DV, B: CV).
struct HeraldedState {
  DensityOperator state;
  std::optional<double> herald_probability;  // absent for the perturbative states
  double mu = 0.0;
  std::vector<std::string> warnings;
};

/// Raised when the heralding event has vanishing probability.
class HeraldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Photon-number cutoff of the herald, TMSS and DV modes in the exact path.
inline constexpr Index kAuxiliaryDim = 6;

/// Default CV cutoff for a source, with headroom for the subtracted states.
Index default_cv_dim(const SourceSpec& source);

/// Full evolution: source (a), herald (b), TMSS (c, d); tap BS(a, b), central
/// BS(b, c), herald mode b, trace c. The enhanced scheme first subtracts a
/// photon locally through BS(a, e) with e heralded on one photon. dim is the
/// CV cutoff, 0 picks default_cv_dim. Loss and phase noise act after heralding.
HeraldedState scheme_qubit_exact(const SchemeParams& p, Index dim = 0);
HeraldedState scheme_enhanced_exact(const SchemeParams& p, Index dim = 0);
HeraldedState scheme_qutrit_exact(const SchemeParams& p, Index dim = 0);
HeraldedState scheme_exact(Scheme scheme, const SchemeParams& p, Index dim = 0);

/// S_B (|0,1> + mu |1,0>) / sqrt(1 + mu^2); zeta = 0 gives the unsqueezed model.
HeraldedState scheme_qubit_perturbative(double mu, SqueezeParam zeta, Index dim = 0);
/// sqrt(3 + 1/sinh^2 zeta) |0>|2PS> + mu |1>|1PS>, normalized.
HeraldedState scheme_enhanced_perturbative(double mu, SqueezeParam zeta, Index dim = 0);
/// S_B [mu^2 |2,0> + sqrt2 mu |1,1> + |0>(c|0> + |2>)], normalized.
HeraldedState scheme_qutrit_perturbative(double mu, SqueezeParam zeta, Index dim = 0);
HeraldedState scheme_perturbative(Scheme scheme, double mu, SqueezeParam zeta, Index dim = 0);

/// Loss, then phase noise on the DV mode.
HeraldedState apply_channels(HeraldedState hs, const LossSpec& loss, const PhaseNoiseSpec& noise);

/// mu = lambda r / (theta t sinh zeta) for a squeezed source.
double weight_from_params(const SchemeParams& p);
/// Perturbative state at the weight implied by p, with p's channels applied.
/// Warns when theta, theta0 or lambda leave the small-parameter regime.
HeraldedState perturbative_from_params(Scheme scheme, const SchemeParams& p, Index dim = 0);
/// Central reflectivity r giving weight mu for the other parameters of p.
double central_reflectivity_for_mu(double mu, const SchemeParams& p);

/// Weight maximizing entanglement: qubit mu^2 = eta_B / eta_A, enhanced
/// mu^2 = 2(1 + c^2), qutrit mu^4 = 1 + c^2 (lossless forms for the last two).
double balancing_mu(Scheme scheme, SqueezeParam zeta, const LossSpec& loss = {});

struct CoincidencePair {
  double first;
  double second;
};

/// Local-subtraction coincidences (C_0A, C_0B) = g N0 N tau / T.
CoincidencePair coincidence_counts(double n0, double n_a, double n_b, double g_a, double g_b,
                                   double tau, double acquisition);
/// Two-photon coincidences (C_AA, C_BB) = g N^2 tau / T.
CoincidencePair two_photon_coincidences(double n_a, double n_b, double g_a, double g_b, double tau,
                                        double acquisition);
/// g^(2) of a squeezed vacuum, 3 + 1/sinh^2 zeta.
double squeezed_autocorrelation(SqueezeParam zeta);

/// (|0>|cat_-> + |1>|cat_+>)/sqrt2 for n_subtract = 0 and
/// (|0>|cat_+> + |1>|cat_->)/sqrt2 for n_subtract = 1.
PureState hybrid_target(int n_subtract, double alpha, Index dim);

struct ConversionResult {
  DensityOperator state;
  double probability;
};

/// Mixes c0|0> + c1|1> with the DV mode on a 50/50 beam splitter, heralds one
/// photon on the input port and traces the DV mode.
ConversionResult convert_dv_to_cv(Complex c0, Complex c1, const DensityOperator& hybrid);

}  // namespace hybrid

#endif  // HYBRID_SCHEMES_HPP
