#include "hybrid/schemes.hpp"

#include "hybrid/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace hybrid {

namespace {

constexpr double kPerturbativeLimit = 0.15;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void validate(const SchemeParams& p) {
  require(p.tap_theta >= 0.0 && p.tap_theta <= std::numbers::pi / 2, "tap_theta must lie in [0, pi/2]");
  require(p.tap_theta0 >= 0.0 && p.tap_theta0 <= std::numbers::pi / 2, "tap_theta0 must lie in [0, pi/2]");
  require(p.tmss_lambda >= 0.0 && p.tmss_lambda < 1.0, "tmss_lambda must lie in [0, 1)");
  require(p.central_r >= 0.0 && p.central_r <= 1.0, "central_r must lie in [0, 1]");
}

void require_weight(double mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw std::invalid_argument("mu must be finite and >= 0");
}

PureState source_state(const SourceSpec& source, Index dim) {
  if (source.kind() == SourceSpec::Kind::cat) return cat_state(source.alpha(), CatParity::even, dim);
  return subtracted_squeezed(0, source.squeeze(), dim);
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

CVector unit(Index k, Index dim) {
  CVector v = CVector::Zero(dim);
  v(k) = 1.0;
  return v;
}

HeraldedState from_amplitudes(Index dv_dim, Index cv_dim, CVector v, double mu) {
  const PureState psi(ModeSpace({dv_dim, cv_dim}), v / v.norm());
  return HeraldedState{DensityOperator::projector(psi), std::nullopt, mu, {}};
}

Index perturbative_dim(SqueezeParam zeta, Index dim) {
  return dim == 0 ? default_cv_dim(SourceSpec::squeezed(zeta)) : dim;
}

HeraldedState run_exact(Scheme scheme, const SchemeParams& p, Index dim) {
  validate(p);
  const Index cv = dim == 0 ? default_cv_dim(p.source) : dim;
  const Index aux = scheme == Scheme::qutrit ? kAuxiliaryDim + 1 : kAuxiliaryDim;
  if (std::pow(p.tmss_lambda, 2.0 * static_cast<double>(aux)) >= kSqueezedTailLimit) {
    throw TruncationError("scheme: TMSS gain too large for the auxiliary cutoff");
  }

  const PureState src = source_state(p.source, cv);
  PureState bob = src;
  if (scheme == Scheme::enhanced) {
    PureState local = tensor(src, vacuum(aux));
    local = apply_two_mode_operator(local, beam_splitter_unitary(p.tap_theta0, 0.0, 0.0, cv, aux), 0, 1);
    bob = project(local, 1, 1);
  }

  // Modes: a (0), b (1), c (2), d (3).
  PureState psi = tensor(tensor(bob, vacuum(aux)), tmss_state(TmssParam(p.tmss_lambda), TmssOrder::exact, aux));
  psi = apply_two_mode_operator(psi, beam_splitter_unitary(p.tap_theta, 0.0, 0.0, cv, aux), 0, 1);
  psi = apply_two_mode_operator(psi, beam_splitter_unitary(std::asin(p.central_r), p.delta_phi, 0.0, aux, aux),
                                1, 2);
  const PureState heralded = project(psi, 1, scheme == Scheme::qutrit ? 2 : 1);
  const double probability = heralded.amplitudes().squaredNorm();
  if (!(probability > 1e-300)) throw HeraldError("scheme: heralding event has zero probability");

  const Index keep[] = {2, 0};
  HeraldedState out{reduced_density(heralded, keep).normalized(), probability, 0.0, {}};

  const RVector pop = dv_populations(out.state);
  const CMatrix a = annihilation(cv);
  const CVector a1 = a * src.amplitudes();
  const CVector a2 = a * a1;
  const double m1 = a1.squaredNorm();
  const double m2 = a2.squaredNorm();
  if (pop(0) <= 0.0) {
    out.mu = std::numeric_limits<double>::infinity();
  } else if (scheme == Scheme::qubit) {
    out.mu = std::sqrt((1.0 - pop(0)) / pop(0));
  } else if (scheme == Scheme::enhanced) {
    out.mu = std::sqrt(pop(1) / pop(0) * m2 / (m1 * m1));
  } else {
    out.mu = std::pow(pop(2) / pop(0) * m2 / (2.0 * m1 * m1), 0.25);
  }
  return apply_channels(std::move(out), p.loss, p.phase_noise);
}

}  // namespace

double SourceSpec::alpha() const {
  if (kind_ != Kind::cat) throw std::logic_error("SourceSpec: not a cat source");
  return value_;
}

SqueezeParam SourceSpec::squeeze() const {
  if (kind_ != Kind::squeezed) throw std::logic_error("SourceSpec: not a squeezed source");
  return SqueezeParam(value_);
}

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::qubit:
      return "qubit";
    case Scheme::enhanced:
      return "enhanced";
    case Scheme::qutrit:
      return "qutrit";
  }
  return "unknown";
}

Index default_cv_dim(const SourceSpec& source) {
  if (source.kind() == SourceSpec::Kind::cat) return std::max<Index>(12, coherent_cutoff(source.alpha()) + 4);
  const double zeta = source.squeeze().zeta();
  if (zeta == 0.0) return 4;
  return std::max<Index>(12, squeezed_cutoff(zeta) + 4);
}

HeraldedState scheme_qubit_exact(const SchemeParams& p, Index dim) { return run_exact(Scheme::qubit, p, dim); }
HeraldedState scheme_enhanced_exact(const SchemeParams& p, Index dim) {
  return run_exact(Scheme::enhanced, p, dim);
}
HeraldedState scheme_qutrit_exact(const SchemeParams& p, Index dim) { return run_exact(Scheme::qutrit, p, dim); }

HeraldedState scheme_exact(Scheme scheme, const SchemeParams& p, Index dim) { return run_exact(scheme, p, dim); }

HeraldedState scheme_qubit_perturbative(double mu, SqueezeParam zeta, Index dim) {
  require_weight(mu);
  const Index cv = perturbative_dim(zeta, dim);
  const CMatrix s = squeeze_unitary(zeta, cv);
  return from_amplitudes(2, cv, kron(unit(0, 2), s.col(1)) + mu * kron(unit(1, 2), s.col(0)), mu);
}

HeraldedState scheme_enhanced_perturbative(double mu, SqueezeParam zeta, Index dim) {
  require_weight(mu);
  if (!(zeta.zeta() > 0.0)) throw std::domain_error("enhanced scheme needs zeta > 0");
  const Index cv = perturbative_dim(zeta, dim);
  const double sh = std::sinh(zeta.zeta());
  const double weight = std::sqrt(3.0 + 1.0 / (sh * sh));
  const CVector two = subtracted_squeezed(2, zeta, cv).amplitudes();
  const CVector one = subtracted_squeezed(1, zeta, cv).amplitudes();
  return from_amplitudes(2, cv, weight * kron(unit(0, 2), two) + mu * kron(unit(1, 2), one), mu);
}

HeraldedState scheme_qutrit_perturbative(double mu, SqueezeParam zeta, Index dim) {
  require_weight(mu);
  if (!(zeta.zeta() > 0.0)) throw std::domain_error("qutrit scheme needs zeta > 0");
  const Index cv = perturbative_dim(zeta, dim);
  const CMatrix s = squeeze_unitary(zeta, cv);
  const CVector v = mu * mu * kron(unit(2, 3), s.col(0)) + std::numbers::sqrt2 * mu * kron(unit(1, 3), s.col(1)) +
                    kron(unit(0, 3), zeta.c() * s.col(0) + s.col(2));
  return from_amplitudes(3, cv, v, mu);
}

HeraldedState scheme_perturbative(Scheme scheme, double mu, SqueezeParam zeta, Index dim) {
  switch (scheme) {
    case Scheme::qubit:
      return scheme_qubit_perturbative(mu, zeta, dim);
    case Scheme::enhanced:
      return scheme_enhanced_perturbative(mu, zeta, dim);
    case Scheme::qutrit:
      return scheme_qutrit_perturbative(mu, zeta, dim);
  }
  throw std::invalid_argument("unknown scheme");
}

HeraldedState apply_channels(HeraldedState hs, const LossSpec& loss, const PhaseNoiseSpec& noise) {
  if (!loss.lossless()) hs.state = apply_loss(hs.state, loss);
  if (noise.sigma > 0.0) hs.state = dephase(hs.state, 0, noise);
  return hs;
}

double weight_from_params(const SchemeParams& p) {
  validate(p);
  const double sh = std::sinh(p.source.squeeze().zeta());
  const double t = std::sqrt(1.0 - p.central_r * p.central_r);
  const double den = std::sin(p.tap_theta) * t * sh;
  if (!(den > 0.0)) throw std::domain_error("weight_from_params: theta, t and zeta must be positive");
  return p.tmss_lambda * p.central_r / den;
}

HeraldedState perturbative_from_params(Scheme scheme, const SchemeParams& p, Index dim) {
  HeraldedState hs = scheme_perturbative(scheme, weight_from_params(p), p.source.squeeze(), dim);
  auto check = [&](double value, const char* name) {
    if (value > kPerturbativeLimit) {
      hs.warnings.push_back(std::string(name) + " = " + std::to_string(value) +
                            " is outside the small-parameter regime (<= 0.15)");
    }
  };
  check(p.tap_theta, "tap_theta");
  if (scheme == Scheme::enhanced) check(p.tap_theta0, "tap_theta0");
  check(p.tmss_lambda, "tmss_lambda");
  return apply_channels(std::move(hs), p.loss, p.phase_noise);
}

double central_reflectivity_for_mu(double mu, const SchemeParams& p) {
  require_weight(mu);
  if (!(p.tmss_lambda > 0.0)) throw std::domain_error("central_reflectivity_for_mu: lambda must be positive");
  const double k = mu * std::sin(p.tap_theta) * std::sinh(p.source.squeeze().zeta()) / p.tmss_lambda;
  return k / std::sqrt(1.0 + k * k);
}

double balancing_mu(Scheme scheme, SqueezeParam zeta, const LossSpec& loss) {
  if (scheme == Scheme::qubit) {
    if (!(loss.eta_a > 0.0)) throw std::domain_error("balancing_mu: eta_a must be positive");
    return std::sqrt(loss.eta_b / loss.eta_a);
  }
  if (!(zeta.zeta() > 0.0)) throw std::domain_error("balancing_mu: zeta must be positive");
  const double c = zeta.c();
  if (scheme == Scheme::enhanced) return std::sqrt(2.0 * (1.0 + c * c));
  return std::pow(1.0 + c * c, 0.25);
}

CoincidencePair coincidence_counts(double n0, double n_a, double n_b, double g_a, double g_b, double tau,
                                   double acquisition) {
  require(n0 >= 0.0 && n_a >= 0.0 && n_b >= 0.0 && g_a >= 0.0 && g_b >= 0.0, "coincidence_counts: negative input");
  require(acquisition > 0.0 && tau >= 0.0 && tau <= acquisition, "coincidence_counts: need 0 <= tau <= T");
  return {g_a * n0 * n_a * tau / acquisition, g_b * n0 * n_b * tau / acquisition};
}

CoincidencePair two_photon_coincidences(double n_a, double n_b, double g_a, double g_b, double tau,
                                        double acquisition) {
  require(n_a >= 0.0 && n_b >= 0.0 && g_a >= 0.0 && g_b >= 0.0, "two_photon_coincidences: negative input");
  require(acquisition > 0.0 && tau >= 0.0 && tau <= acquisition, "two_photon_coincidences: need 0 <= tau <= T");
  return {g_a * n_a * n_a * tau / acquisition, g_b * n_b * n_b * tau / acquisition};
}

double squeezed_autocorrelation(SqueezeParam zeta) {
  if (!(zeta.zeta() > 0.0)) throw std::domain_error("squeezed_autocorrelation: zeta must be positive");
  const double sh = std::sinh(zeta.zeta());
  return 3.0 + 1.0 / (sh * sh);
}

PureState hybrid_target(int n_subtract, double alpha, Index dim) {
  if (n_subtract != 0 && n_subtract != 1) throw std::invalid_argument("hybrid_target: n_subtract is 0 or 1");
  const CVector plus = cat_state(alpha, CatParity::even, dim).amplitudes();
  const CVector minus = cat_state(alpha, CatParity::odd, dim).amplitudes();
  const CVector v = n_subtract == 0 ? CVector(kron(unit(0, 2), minus) + kron(unit(1, 2), plus))
                                    : CVector(kron(unit(0, 2), plus) + kron(unit(1, 2), minus));
  return PureState(ModeSpace({2, dim}), v / std::numbers::sqrt2);
}

ConversionResult convert_dv_to_cv(Complex c0, Complex c1, const DensityOperator& hybrid) {
  if (std::abs(std::norm(c0) + std::norm(c1) - 1.0) > 1e-8) {
    throw std::invalid_argument("convert_dv_to_cv: |c0|^2 + |c1|^2 must be 1");
  }
  if (hybrid.space().mode_count() != 2) throw std::invalid_argument("convert_dv_to_cv: two-mode input expected");
  const Index da = hybrid.space().dim(0);
  const Index db = hybrid.space().dim(1);
  const Index pad = da + 1;
  const ModeSpace padded({pad, db});
  CVector input = CVector::Zero(pad);
  input(0) = c0;
  input(1) = c1;
  const PureState in(ModeSpace({pad}), input);
  const CMatrix bs = beam_splitter_unitary(std::numbers::pi / 4, 0.0, 0.0, pad, pad);

  const DensityOperator rho = hybrid.normalized();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((rho.matrix() + rho.matrix().adjoint()) / 2.0);
  CMatrix out = CMatrix::Zero(db, db);
  double probability = 0.0;
  const Index keep[] = {1};
  for (Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double weight = solver.eigenvalues()(k);
    if (weight <= 1e-14) continue;
    const PureState branch = embed(PureState(rho.space(), solver.eigenvectors().col(k)), padded);
    // Modes (A, B, C); the beam splitter mixes A and C.
    const PureState mixed = apply_two_mode_operator(tensor(branch, in), bs, 0, 2);
    const PureState heralded = project(mixed, 2, 1);
    const double norm2 = heralded.amplitudes().squaredNorm();
    if (norm2 == 0.0) continue;
    probability += weight * norm2;
    out += weight * reduced_density(heralded, keep).matrix();
  }
  if (!(probability > 1e-300)) throw HeraldError("convert_dv_to_cv: heralding event has zero probability");
  return {DensityOperator(ModeSpace({db}), out / probability), probability};
}

}  // namespace hybrid
