#ifndef HYBRID_CLOSED_FORMS_HPP
#define HYBRID_CLOSED_FORMS_HPP

// Analytic results for the hybrid qubit/qutrit states, used as the oracle
// layer for the numerical engine.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hybrid::closed_forms {

namespace detail {

template <std::floating_point Real>
void require_unit_interval(Real x, const char* name) {
  if (!(x >= Real(0) && x <= Real(1))) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1]");
  }
}

template <std::floating_point Real>
void require_nonnegative(Real x, const char* name) {
  if (!(x >= Real(0))) throw std::domain_error(std::string(name) + " must be non-negative");
}

}  // namespace detail

/// c = 1 / (sqrt(2) tanh zeta).
template <std::floating_point Real>
Real squeezing_c(Real zeta) {
  if (!(zeta > Real(0))) throw std::domain_error("squeezing_c: zeta must be positive");
  return Real(1) / (std::numbers::sqrt2_v<Real> * std::tanh(zeta));
}

/// Wigner value at the origin of the <0|rho|0> block for |0,1> + mu |1,0>
/// after losses eta_a (DV) and eta_b (CV).
template <std::floating_point Real>
Real w_qubit_lossy(Real eta_a, Real eta_b, Real mu) {
  detail::require_unit_interval(eta_a, "eta_a");
  detail::require_unit_interval(eta_b, "eta_b");
  detail::require_nonnegative(mu, "mu");
  const Real vac = (Real(1) - eta_a) * mu * mu;
  return ((Real(1) - Real(2) * eta_b) + vac) / (Real(1) + vac);
}

/// w_qubit_lossy at the loss-balanced weight mu^2 = eta_b / eta_a.
template <std::floating_point Real>
Real w_qubit_balanced(Real eta_a, Real eta_b) {
  detail::require_unit_interval(eta_a, "eta_a");
  detail::require_unit_interval(eta_b, "eta_b");
  const Real den = eta_a + eta_b - eta_a * eta_b;
  if (den == Real(0)) throw std::domain_error("w_qubit_balanced: both transmissions vanish");
  return (eta_a + eta_b - Real(3) * eta_a * eta_b) / den;
}

/// Entanglement negativity of |0,1> + mu |1,0> under symmetric loss eta.
template <std::floating_point Real>
Real n_qubit_lossy(Real eta, Real mu) {
  detail::require_unit_interval(eta, "eta");
  detail::require_nonnegative(mu, "mu");
  const Real w = Real(1) + mu * mu;
  const Real loss = Real(1) - eta;
  return (std::sqrt(Real(4) * eta * eta * mu * mu + loss * loss * w * w) - loss * w) / (Real(2) * w);
}

/// Lossless negativity of the state with local subtraction.
template <std::floating_point Real>
Real n_enhanced_lossless(Real mu, Real c) {
  detail::require_nonnegative(mu, "mu");
  const Real k = Real(2) + Real(2) * c * c;
  return mu * std::sqrt(k) / (k + mu * mu);
}

/// Lossless negativity of the hybrid qutrit state.
template <std::floating_point Real>
Real n_qutrit_lossless(Real mu, Real c) {
  detail::require_nonnegative(mu, "mu");
  const Real mu2 = mu * mu;
  const Real mu4 = mu2 * mu2;
  const Real c2 = c * c;
  const Real root = std::sqrt(c2 * c2 + Real(2) * c2 * (mu4 + Real(1)) + (mu4 - Real(1)) * (mu4 - Real(1)));
  const Real base = Real(1) + c2 + mu4;
  // base >= root analytically; clamp rounding below zero.
  const Real lower = std::sqrt(std::max(base - root, Real(0)));
  const Real upper = std::sqrt(base + root);
  return (mu2 + mu * lower + mu * upper) / (c2 + (mu2 + Real(1)) * (mu2 + Real(1)));
}

/// Maximum of n_qutrit_lossless over mu, reached at mu^4 = 1 + c^2.
template <std::floating_point Real>
Real n_qutrit_max(Real c) {
  if (!(c >= Real(1) / std::numbers::sqrt2_v<Real> - Real(1e-12))) {
    throw std::domain_error("n_qutrit_max: c must be >= 1/sqrt(2)");
  }
  const Real s = std::sqrt(Real(1) + c * c);
  const Real num = s * (std::sqrt(Real(2) * s - Real(2) * c) + std::sqrt(Real(2) * s + Real(2) * c) + Real(1));
  return num / (Real(2) * (Real(1) + c * c + s));
}

template <std::floating_point Real>
struct FidelitySet {
  Real f0;   // |<cat+|0PS>|^2
  Real f1;   // |<cat-|1PS>|^2
  Real f2;   // |<cat+|2PS>|^2
  Real fn0;  // target fidelity without local subtraction
  Real fn1;  // target fidelity with local subtraction
};

/// Overlaps between photon-subtracted squeezed states and cat states of size
/// alpha2 = |alpha|^2, with lam = tanh(zeta).
template <std::floating_point Real>
FidelitySet<Real> fidelity_formulas(Real alpha2, Real lam) {
  if (!(alpha2 > Real(0))) throw std::domain_error("fidelity_formulas: alpha2 must be positive");
  if (!(lam >= Real(0) && lam < Real(1))) throw std::domain_error("fidelity_formulas: lam must lie in [0, 1)");
  const Real one_minus = Real(1) - lam * lam;
  const Real gain = std::exp(lam * alpha2);
  FidelitySet<Real> f{};
  f.f0 = std::sqrt(one_minus) * gain / std::cosh(alpha2);
  f.f1 = std::pow(one_minus, Real(1.5)) * alpha2 * gain / std::sinh(alpha2);
  const Real lift = Real(1) + lam * alpha2;
  f.f2 = std::pow(one_minus, Real(2.5)) * lift * lift * gain / ((Real(1) + Real(2) * lam * lam) * std::cosh(alpha2));
  const Real s1 = std::sqrt(f.f1);
  f.fn0 = (std::sqrt(f.f0) + s1) * (std::sqrt(f.f0) + s1) / Real(4);
  f.fn1 = (std::sqrt(f.f2) + s1) * (std::sqrt(f.f2) + s1) / Real(4);
  return f;
}

/// Lossless qubit negativity under Gaussian phase noise of width sigma.
template <std::floating_point Real>
Real phase_decay(Real sigma) {
  detail::require_nonnegative(sigma, "sigma");
  return std::exp(-sigma * sigma / Real(2)) / Real(2);
}

/// Origin value of the <1|rho|1> block with local subtraction, small squeezing.
template <std::floating_point Real>
Real w_enhanced(Real eta_b) {
  detail::require_unit_interval(eta_b, "eta_b");
  return Real(1) - Real(2) * eta_b;
}

}  // namespace hybrid::closed_forms

#endif  // HYBRID_CLOSED_FORMS_HPP
