#include "hybrid/verify.hpp"

#include "hybrid/closed_forms.hpp"
#include "hybrid/metrics.hpp"
#include "hybrid/schemes.hpp"
#include "hybrid/sweep.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdio>
#include <random>

namespace hybrid {

namespace cf = closed_forms;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;
constexpr double kDegree = std::numbers::pi / 180.0;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

template <typename F>
double root(F f, double lo, double hi) {
  std::uintmax_t iterations = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(50),
                                                        iterations);
  return (a + b) / 2.0;
}

/// Engine value at the default cutoff, recording agreement with cutoff + 5.
template <typename F>
double converged(CheckOutcome& out, const std::string& what, F f, Index dim) {
  const double coarse = f(dim);
  const double fine = f(dim + 5);
  if (!(std::abs(coarse - fine) <= kConvergenceTolerance)) {
    out.require(what + " converged in the cutoff (" + fmt(coarse) + " vs " + fmt(fine) + ")", false);
  }
  return coarse;
}

Index cv_dim(SqueezeParam zeta) { return default_cv_dim(SourceSpec::squeezed(zeta)); }

double lossy_negativity(Scheme scheme, double mu, SqueezeParam zeta, double eta, Index dim) {
  HeraldedState hs = scheme_perturbative(scheme, mu, zeta, dim);
  return entanglement_negativity(apply_channels(std::move(hs), LossSpec::symmetric(eta), {}).state);
}

CMatrix random_density(std::mt19937_64& rng, Index dim) {
  std::normal_distribution<double> g;
  CMatrix m(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  CMatrix rho = m * m.adjoint();
  return rho / rho.trace().real();
}

PureState top_eigenvector(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix());
  return PureState(rho.space(), solver.eigenvectors().col(solver.eigenvalues().size() - 1));
}

// ---------------------------------------------------------------------------

CheckOutcome wigner_boundary(const Tolerance& tol) {
  CheckOutcome out;
  for (double eta_a : {0.5, 0.6, 0.75, 0.9, 1.0}) {
    const double eta_b = 1.0 / (3.0 - 1.0 / eta_a);
    out.near("W_balanced(" + fmt(eta_a) + ", " + fmt(eta_b) + ")", cf::w_qubit_balanced(eta_a, eta_b), 0.0,
             tol(1e-12));
  }
  const double r = root([](double eta) { return cf::w_qubit_balanced(eta, eta); }, 0.5, 1.0);
  out.near("symmetric root", r, 2.0 / 3.0, tol(1e-12));
  out.near("W_lossy at mu^2 = eta_B/eta_A", cf::w_qubit_lossy(1.0, 0.5, 1.0), 0.0, tol(1e-12));
  return out;
}

CheckOutcome wigner_full_model(const Tolerance& tol) {
  CheckOutcome out;
  const SqueezeParam zeta = SqueezeParam::from_db(3.0);
  const Index dim = cv_dim(zeta);
  auto w = [&](double eta, Index d) {
    const HeraldedState hs =
        apply_channels(scheme_qubit_perturbative(1.0, zeta, d), LossSpec::symmetric(eta), {});
    return block_origin_value(hs.state, 0);
  };
  const double r = root([&](double eta) { return w(eta, dim); }, 0.5, 0.95);
  converged(out, "W at the root", [&](Index d) { return w(r, d); }, dim);
  out.near("zero crossing of <0|rho|0> origin value", r, 0.678, tol(0.005));
  out.near("lossless <0|rho|0> origin value at small squeezing",
           block_origin_value(scheme_qubit_perturbative(1.0, SqueezeParam(0.01)).state, 0), -1.0, tol(1e-3));
  return out;
}

CheckOutcome entanglement_loss_closed_form(const Tolerance& tol) {
  CheckOutcome out;
  out.near("N(2/3, 1)", cf::n_qubit_lossy(2.0 / 3.0, 1.0), 0.206, tol(0.01));
  out.near("N(0.9, 1)", cf::n_qubit_lossy(0.9, 1.0), 0.403, tol(0.01));
  out.near("N(1, 1)", cf::n_qubit_lossy(1.0, 1.0), 0.5, tol(1e-12));
  return out;
}

CheckOutcome entanglement_loss_engine(const Tolerance& tol) {
  CheckOutcome out;
  for (double zeta : {0.0, 0.01}) {
    const SqueezeParam z(zeta);
    for (double eta : {0.5, 2.0 / 3.0, 0.8, 0.9, 1.0}) {
      for (double mu : {0.5, 1.0, 2.0}) {
        const double engine = converged(
            out, "engine N", [&](Index d) { return lossy_negativity(Scheme::qubit, mu, z, eta, d); }, cv_dim(z));
        out.near("zeta " + fmt(zeta) + " eta " + fmt(eta) + " mu " + fmt(mu), engine, cf::n_qubit_lossy(eta, mu),
                 tol(1e-3));
      }
    }
  }
  return out;
}

CheckOutcome maximal_qubit(const Tolerance& tol) {
  CheckOutcome out;
  for (double db : {0.0, 3.0, 6.0}) {
    const SqueezeParam z = SqueezeParam::from_db(db);
    const double n = converged(
        out, "N", [&](Index d) { return entanglement_negativity(scheme_qubit_perturbative(1.0, z, d).state); },
        cv_dim(z));
    out.near("balanced lossless N at " + fmt(db) + " dB", n, 0.5, tol(1e-6));
  }
  return out;
}

CheckOutcome phase_noise(const Tolerance& tol) {
  CheckOutcome out;
  const SqueezeParam z = SqueezeParam::from_db(3.0);
  for (double deg : {5.0, 18.0, 30.0}) {
    const PhaseNoiseSpec noise{deg * kDegree};
    const double n = entanglement_negativity(apply_channels(scheme_qubit_perturbative(1.0, z), {}, noise).state);
    out.near("N at sigma " + fmt(deg) + " deg", n, cf::phase_decay(noise.sigma), tol(1e-4));
    if (deg == 18.0) out.near("relative drop at 18 deg", 1.0 - n / 0.5, 0.05, tol(0.005));
  }
  return out;
}

CheckOutcome fidelity_closed_form(const Tolerance& tol) {
  CheckOutcome out;
  const auto f1 = cf::fidelity_formulas(1.0, std::tanh(SqueezeParam::from_db(3.0).zeta()));
  out.near("Fn0 at |alpha|^2 = 1, 3 dB", f1.fn0, 0.92, tol(0.005));
  out.near("Fn1 at |alpha|^2 = 1, 3 dB", f1.fn1, 0.99, tol(0.005));
  const auto f2 = cf::fidelity_formulas(2.0, std::tanh(SqueezeParam::from_db(4.0).zeta()));
  out.near("Fn1 at |alpha|^2 = 2, 4 dB", f2.fn1, 0.96, tol(0.01));
  out.near("Fn0 at |alpha|^2 = 2, 4 dB", f2.fn0, 0.75, tol(0.01));
  return out;
}

CheckOutcome fidelity_engine(const Tolerance& tol) {
  CheckOutcome out;
  for (auto [alpha2, db] : {std::pair{1.0, 3.0}, std::pair{2.0, 4.0}}) {
    const double alpha = std::sqrt(alpha2);
    const SqueezeParam z = SqueezeParam::from_db(db);
    const Index dim = std::max(cv_dim(z), coherent_cutoff(alpha) + 2);
    const auto f = cf::fidelity_formulas(alpha2, std::tanh(z.zeta()));
    const PureState plus = cat_state(alpha, CatParity::even, dim);
    const PureState minus = cat_state(alpha, CatParity::odd, dim);
    const std::string tag = " (|alpha|^2 " + fmt(alpha2) + ", " + fmt(db) + " dB)";
    out.near("F0" + tag, fidelity(plus, subtracted_squeezed(0, z, dim)), f.f0, tol(1e-6));
    out.near("F1" + tag, fidelity(minus, subtracted_squeezed(1, z, dim)), f.f1, tol(1e-6));
    out.near("F2" + tag, fidelity(plus, subtracted_squeezed(2, z, dim)), f.f2, tol(1e-6));
    const DensityOperator phi0 = scheme_qubit_perturbative(1.0, z, dim).state;
    const DensityOperator phi1 = scheme_enhanced_perturbative(balancing_mu(Scheme::enhanced, z), z, dim).state;
    out.near("Fn0" + tag, fidelity(hybrid_target(0, alpha, dim), phi0), f.fn0, tol(1e-6));
    out.near("Fn1" + tag, fidelity(hybrid_target(1, alpha, dim), phi1), f.fn1, tol(1e-6));
  }
  return out;
}

CheckOutcome enhanced_balancing(const Tolerance& tol) {
  CheckOutcome out;
  const SqueezeParam z = SqueezeParam::from_db(3.0);
  const double c = z.c();
  out.near("N at mu^2 = 2(1 + c^2)", cf::n_enhanced_lossless(std::sqrt(2.0 * (1.0 + c * c)), c), 0.5, tol(1e-12));
  out.near("N at mu = 1, 3 dB", cf::n_enhanced_lossless(1.0, c), 0.276, tol(0.005));
  for (double mu : {1.0, balancing_mu(Scheme::enhanced, z)}) {
    const double engine = converged(
        out, "engine N",
        [&](Index d) { return entanglement_negativity(scheme_enhanced_perturbative(mu, z, d).state); }, cv_dim(z));
    out.near("engine N at mu " + fmt(mu), engine, cf::n_enhanced_lossless(mu, c), tol(1e-6));
  }
  const double g_b = squeezed_autocorrelation(z);
  const CoincidencePair pair = coincidence_counts(1.0, g_b, 1.0, 1.0, g_b, 1e-9, 1.0);
  out.near("C_0A = C_0B at N_A/N_B = g_B", pair.first, pair.second, tol(1e-15));
  const double mu4 = std::pow(balancing_mu(Scheme::qutrit, z), 4);
  const CoincidencePair two = two_photon_coincidences(std::sqrt(g_b / 2.0), 1.0, 2.0, g_b, 1e-9, 1.0);
  out.near("C_AA = C_BB gives mu^4 = g_B / 2", two.first, two.second, tol(1e-15));
  out.near("mu^4 = 1 + c^2 = g_B / 2", mu4, g_b / 2.0, tol(1e-12));
  return out;
}

CheckOutcome enhanced_wigner(const Tolerance& tol) {
  CheckOutcome out;
  const SqueezeParam z(0.02);
  for (double eta_b : {0.5, 0.8, 1.0}) {
    for (double eta_a : {0.5, 0.7, 1.0}) {
      for (double mu : {0.5, 1.0, 3.0}) {
        const HeraldedState hs = apply_channels(scheme_enhanced_perturbative(mu, z), {eta_a, eta_b}, {});
        out.near("<1|rho|1> origin, eta_A " + fmt(eta_a) + " eta_B " + fmt(eta_b) + " mu " + fmt(mu),
                 block_origin_value(hs.state, 1), cf::w_enhanced(eta_b), tol(1e-3));
      }
    }
  }
  return out;
}

CheckOutcome qutrit_negativity(const Tolerance& tol) {
  CheckOutcome out;
  out.near("N_max(1/sqrt2)", cf::n_qutrit_max(1.0 / std::numbers::sqrt2), 0.895, tol(0.005));
  const SqueezeParam z6 = SqueezeParam::from_db(6.0);
  out.near("N_max at 6 dB", cf::n_qutrit_max(z6.c()), 0.823, tol(0.005));
  for (double c : {1.0 / std::numbers::sqrt2, 1.0, z6.c(), 2.5}) {
    out.near("N at mu^4 = 1 + c^2 equals N_max, c " + fmt(c),
             cf::n_qutrit_lossless(std::pow(1.0 + c * c, 0.25), c), cf::n_qutrit_max(c), tol(1e-10));
  }
  const double mu = balancing_mu(Scheme::qutrit, z6);
  const double engine = converged(
      out, "engine N", [&](Index d) { return entanglement_negativity(scheme_qutrit_perturbative(mu, z6, d).state); },
      cv_dim(z6));
  out.near("engine N at 6 dB balance", engine, cf::n_qutrit_max(z6.c()), tol(1e-6));
  const HeraldedState hs = scheme_qutrit_perturbative(mu, z6);
  const Index cv = hs.state.space().dim(1);
  const PureState psi = embed(top_eigenvector(hs.state), ModeSpace({6, cv}));
  const RVector pop = dv_populations(DensityOperator::projector(psi));
  out.near("DV leakage beyond |2>", pop.tail(3).sum(), 0.0, tol(1e-10));
  return out;
}

CheckOutcome qutrit_crossovers(const Tolerance& tol) {
  CheckOutcome out;
  const SqueezeParam z3 = SqueezeParam::from_db(3.0);
  const SqueezeParam z6 = SqueezeParam::from_db(6.0);
  const double mu3 = balancing_mu(Scheme::qutrit, z3);
  const double mu6 = balancing_mu(Scheme::qutrit, z6);
  auto q6 = [&](double eta) { return lossy_negativity(Scheme::qutrit, mu6, z6, eta, cv_dim(z6)); };
  auto q3 = [&](double eta) { return lossy_negativity(Scheme::qutrit, mu3, z3, eta, cv_dim(z3)); };
  auto qb = [&](double eta) { return lossy_negativity(Scheme::qubit, 1.0, z3, eta, cv_dim(z3)); };
  const double r1 = root([&](double eta) { return q6(eta) - q3(eta); }, 0.6, 0.999);
  const double r2 = root([&](double eta) { return q6(eta) - qb(eta); }, 0.5, 0.95);
  out.near("6 dB vs 3 dB qutrit crossover", r1, 0.88, tol(0.03));
  out.near("6 dB qutrit vs 3 dB qubit crossover", r2, 0.77, tol(0.03));
  return out;
}

struct ExactComparison {
  double fidelity;
  double mu_exact;
  double mu_formula;
};

ExactComparison compare_exact(Scheme scheme, double theta) {
  const SqueezeParam z = SqueezeParam::from_db(3.0);
  SchemeParams p;
  p.source = SourceSpec::squeezed(z);
  p.tap_theta = p.tap_theta0 = p.tmss_lambda = theta;
  p.central_r = central_reflectivity_for_mu(scheme == Scheme::qubit ? 1.0 : balancing_mu(scheme, z), p);
  const HeraldedState exact = scheme_exact(scheme, p);
  const HeraldedState pert = perturbative_from_params(scheme, p, exact.state.space().dim(1));
  const PureState target = embed(top_eigenvector(pert.state), exact.state.space());
  return {fidelity(target, exact.state), exact.mu, pert.mu};
}

CheckOutcome exact_vs_perturbative(const Tolerance& tol) {
  CheckOutcome out;
  const double thetas[] = {0.02, 0.05, 0.1};
  for (Scheme scheme : {Scheme::qubit, Scheme::enhanced, Scheme::qutrit}) {
    double infid[3];
    for (int i = 0; i < 3; ++i) {
      const ExactComparison c = compare_exact(scheme, thetas[i]);
      infid[i] = 1.0 - c.fidelity;
      if (thetas[i] == 0.05) {
        out.within(to_string(scheme) + " fidelity at theta = lambda = 0.05", c.fidelity, 1.0 - tol(0.005), 1.0);
      }
      if (thetas[i] <= 0.05) {
        out.near(to_string(scheme) + " relative mu error at theta " + fmt(thetas[i]),
                 c.mu_exact / c.mu_formula - 1.0, 0.0, tol(0.01));
      }
    }
    const double slope = (std::log(infid[2]) - std::log(infid[0])) / (std::log(thetas[2]) - std::log(thetas[0]));
    out.near(to_string(scheme) + " log-log infidelity slope", slope, 2.0, tol(0.2));
  }
  return out;
}

CheckOutcome converter(const Tolerance& tol) {
  CheckOutcome out;
  const double alpha = 1.0;
  const Index dim = coherent_cutoff(alpha) + 4;
  const DensityOperator ideal = DensityOperator::projector(hybrid_target(0, alpha, dim));
  const PureState plus = cat_state(alpha, CatParity::even, dim);
  const PureState minus = cat_state(alpha, CatParity::odd, dim);
  out.near("(1, 0) -> cat+", fidelity(plus, convert_dv_to_cv(1.0, 0.0, ideal).state), 1.0, tol(1e-8));
  out.near("(0, 1) -> cat-", fidelity(minus, convert_dv_to_cv(0.0, 1.0, ideal).state), 1.0, tol(1e-8));
  const SqueezeParam z = SqueezeParam::from_db(3.0);
  const Index cv = std::max(cv_dim(z), dim);
  const DensityOperator hybrid = scheme_qubit_perturbative(1.0, z, cv).state;
  const CVector sum = cat_state(alpha, CatParity::even, cv).amplitudes() + cat_state(alpha, CatParity::odd, cv).amplitudes();
  const PureState target(ModeSpace({cv}), sum / sum.norm());
  const double h = 1.0 / std::numbers::sqrt2;
  out.within("(1, 1)/sqrt2 with the 3 dB hybrid", fidelity(target, convert_dv_to_cv(h, h, hybrid).state), 0.9, 1.0);
  return out;
}

CheckOutcome property_suites(const Tolerance& tol) {
  CheckOutcome out;
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double composition = 0.0, involution = 0.0, trace = 0.0, pt_trace = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const ModeSpace space({3, 5});
    const DensityOperator rho(space, random_density(rng, space.total_dim()));
    const double e1 = unit(rng), e2 = unit(rng);
    const Index mode = trial % 2;
    const DensityOperator twice = loss_channel(loss_channel(rho, mode, e1), mode, e2);
    composition = std::max(composition, (twice.matrix() - loss_channel(rho, mode, e1 * e2).matrix()).cwiseAbs().maxCoeff());
    const Index modes[] = {mode};
    const DensityOperator pt = partial_transpose(rho, modes);
    involution = std::max(involution, (partial_transpose(pt, modes).matrix() - rho.matrix()).cwiseAbs().maxCoeff());
    pt_trace = std::max(pt_trace, std::abs(pt.trace() - rho.trace()));
    const DensityOperator noisy = dephase(apply_loss(rho, {e1, e2}), 0, {0.4 * unit(rng)});
    const Index keep[] = {1};
    trace = std::max(trace, std::abs(partial_trace(noisy, keep).trace() - 1.0));
  }
  out.near("loss composition (max deviation)", composition, 0.0, tol(1e-9));
  out.near("partial transpose involution (max deviation)", involution, 0.0, tol(1e-12));
  out.near("partial transpose trace (max deviation)", pt_trace, 0.0, tol(1e-10));
  out.near("channel and partial trace preservation (max deviation)", trace, 0.0, tol(1e-10));

  double worst_bound = 0.0, worst_convergence = 0.0;
  int monotone_failures = 0;
  for (int trial = 0; trial < 12; ++trial) {
    PointParams p;
    p.scheme.scheme = static_cast<Scheme>(trial % 3);
    p.squeezing_db = 0.5 + 5.5 * unit(rng);
    p.mu = 0.2 + 2.5 * unit(rng);
    p.eta_a = 0.3 + 0.7 * unit(rng);
    p.eta_b = 0.3 + 0.7 * unit(rng);
    const Index dim = cv_dim(SqueezeParam::from_db(p.squeezing_db));
    const HeraldedState hs = evaluate_state(p, dim);
    const double n = entanglement_negativity(hs.state);
    const double cap = p.scheme.scheme == Scheme::qutrit ? 1.0 : 0.5;
    worst_bound = std::max({worst_bound, -n, n - cap});
    const std::vector<Metric> metrics{Metric::negativity, Metric::wigner};
    const auto a = compute_metrics(hs, p, metrics);
    const auto b = compute_metrics(evaluate_state(p, dim + 5), p, metrics);
    for (std::size_t i = 0; i < a.size(); ++i) worst_convergence = std::max(worst_convergence, std::abs(a[i] - b[i]));
    PointParams weaker = p;
    weaker.eta_a *= 0.9;
    weaker.eta_b *= 0.9;
    weaker.sigma_deg = 10.0;
    if (entanglement_negativity(evaluate_state(weaker, dim).state) > n + 1e-10) ++monotone_failures;
  }
  out.near("negativity bounds (max violation)", std::max(worst_bound, 0.0), 0.0, tol(1e-10));
  out.near("truncation convergence (max metric change)", worst_convergence, 0.0, tol(kConvergenceTolerance));
  out.require("negativity non-increasing under extra loss and phase noise", monotone_failures == 0);
  return out;
}

}  // namespace

void CheckOutcome::near(const std::string& what, double value, double expected, double tol) {
  const bool ok = std::abs(value - expected) <= tol;
  passed = passed && ok;
  lines.push_back((ok ? "ok    " : "FAIL  ") + what + ": " + fmt(value) + " vs " + fmt(expected) + " (tol " +
                  fmt(tol) + ")");
}

void CheckOutcome::within(const std::string& what, double value, double lo, double hi) {
  const bool ok = value >= lo && value <= hi;
  passed = passed && ok;
  lines.push_back((ok ? "ok    " : "FAIL  ") + what + ": " + fmt(value) + " in [" + fmt(lo) + ", " + fmt(hi) + "]");
}

void CheckOutcome::require(const std::string& what, bool ok) {
  passed = passed && ok;
  lines.push_back((ok ? "ok    " : "FAIL  ") + what);
}

const std::vector<OracleCheck>& oracle_checks() {
  static const std::vector<OracleCheck> checks{
      {"wigner-boundary", 1, "balanced lossy Wigner value vanishes on 1/eta_A + 1/eta_B = 3", wigner_boundary},
      {"wigner-full-model", 2, "3 dB <0|rho|0> origin value crosses zero near eta = 0.678", wigner_full_model},
      {"negativity-loss-closed-form", 3, "lossy qubit negativity golden values", entanglement_loss_closed_form},
      {"negativity-loss-engine", 3, "engine negativity vs lossy closed form at small squeezing",
       entanglement_loss_engine},
      {"qubit-maximal", 4, "balanced lossless qubit negativity is 0.5", maximal_qubit},
      {"phase-noise", 5, "phase-averaged negativity follows exp(-sigma^2/2)/2", phase_noise},
      {"fidelity-closed-form", 6, "target fidelities at the reference cat sizes", fidelity_closed_form},
      {"fidelity-engine", 6, "numeric overlaps agree with the fidelity formulas", fidelity_engine},
      {"enhanced-balancing", 7, "enhanced negativity and two-photon balancing", enhanced_balancing},
      {"enhanced-wigner", 8, "<1|rho|1> origin value is 1 - 2 eta_B", enhanced_wigner},
      {"qutrit-negativity", 9, "qutrit negativity maxima and DV support", qutrit_negativity},
      {"qutrit-crossovers", 10, "lossy qutrit and qubit negativity crossovers", qutrit_crossovers},
      {"exact-vs-perturbative", 11, "full heralding evolution vs perturbative states", exact_vs_perturbative},
      {"converter", 12, "DV to CV qubit converter", converter},
      {"properties", 13, "randomized channel, transpose, bound and convergence properties", property_suites},
  };
  return checks;
}

std::string criterion_title(int criterion) {
  static const char* titles[] = {"Wigner boundary (simplified model)",
                                 "Full-model Wigner threshold",
                                 "Entanglement under loss",
                                 "Maximal qubit entanglement",
                                 "Phase noise",
                                 "Fidelities",
                                 "Enhanced-scheme balancing",
                                 "Enhanced-scheme Wigner",
                                 "Qutrit negativity",
                                 "Qutrit loss crossovers",
                                 "Exact-vs-perturbative oracle",
                                 "Converter",
                                 "Property suites"};
  if (criterion < 1 || criterion > kCriterionCount) throw std::out_of_range("criterion_title: no such criterion");
  return titles[criterion - 1];
}

bool VerifyReport::passed() const {
  for (const auto& e : entries) {
    if (!e.passed()) return false;
  }
  return true;
}

bool VerifyReport::criterion_passed(int criterion) const {
  bool any = false;
  for (const auto& e : entries) {
    if (e.check->criterion != criterion) continue;
    any = true;
    if (!e.passed()) return false;
  }
  return any;
}

VerifyReport verify_oracles(const VerifyOptions& options) {
  const auto& checks = oracle_checks();
  for (const std::string& id : options.ids) {
    const bool known = std::any_of(checks.begin(), checks.end(), [&](const OracleCheck& c) { return c.id == id; });
    if (!known) throw std::invalid_argument("unknown check '" + id + "'");
  }
  const Tolerance tol(options.tolerance);
  VerifyReport report;
  for (const OracleCheck& check : checks) {
    if (!options.ids.empty() && std::find(options.ids.begin(), options.ids.end(), check.id) == options.ids.end()) {
      continue;
    }
    VerifyEntry entry{&check, {}, {}};
    try {
      entry.outcome = check.run(tol);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace hybrid
