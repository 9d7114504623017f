#include "hybrid/closed_forms.hpp"

#include <doctest.h>

using namespace hybrid::closed_forms;

TEST_CASE("balanced Wigner origin value") {
  CHECK(w_qubit_balanced(1.0, 1.0) == doctest::Approx(-1.0));
  CHECK(w_qubit_balanced(2.0 / 3.0, 2.0 / 3.0) == doctest::Approx(0.0));
  CHECK(w_qubit_balanced(0.5, 1.0) == doctest::Approx(0.0));
  CHECK(w_qubit_lossy(0.8, 0.6, std::sqrt(0.6 / 0.8)) == doctest::Approx(w_qubit_balanced(0.8, 0.6)));
  CHECK(w_qubit_lossy(1.0, 0.25, 3.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(w_qubit_balanced(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(w_qubit_lossy(1.1, 0.5, 1.0), std::domain_error);
}

TEST_CASE("lossy qubit negativity") {
  CHECK(n_qubit_lossy(1.0, 1.0) == doctest::Approx(0.5));
  CHECK(n_qubit_lossy(0.0, 1.0) == doctest::Approx(0.0));
  CHECK(n_qubit_lossy(2.0 / 3.0, 1.0) == doctest::Approx(0.2060).epsilon(2e-4));
  CHECK(n_qubit_lossy(0.9, 1.0) == doctest::Approx(0.4028).epsilon(2e-4));
  // Lossless: mu / (1 + mu^2).
  CHECK(n_qubit_lossy(1.0, 2.0) == doctest::Approx(0.4));
}

TEST_CASE("enhanced and qutrit negativities") {
  const double c = squeezing_c(3.0 * std::log(10.0) / 20.0);
  CHECK(c == doctest::Approx(2.1281).epsilon(1e-4));
  const double mu_bal = std::sqrt(2.0 * (1.0 + c * c));
  CHECK(n_enhanced_lossless(mu_bal, c) == doctest::Approx(0.5));
  CHECK(n_enhanced_lossless(1.0, c) == doctest::Approx(0.2758).epsilon(2e-4));
  const double c_min = 1.0 / std::sqrt(2.0);
  CHECK(n_qutrit_max(c_min) == doctest::Approx(0.89518).epsilon(1e-5));
  const double mu_q = std::pow(1.0 + c * c, 0.25);
  CHECK(n_qutrit_lossless(mu_q, c) == doctest::Approx(n_qutrit_max(c)).epsilon(1e-12));
  for (double mu : {0.5, 0.9, 1.1, 2.0}) CHECK(n_qutrit_lossless(mu, c) <= n_qutrit_max(c) + 1e-12);
  CHECK_THROWS_AS(n_qutrit_max(0.5), std::domain_error);
}

TEST_CASE("fidelity formulas") {
  const auto f = fidelity_formulas(1.0, 0.3);
  CHECK(f.f0 > 0.0);
  CHECK(f.f0 <= 1.0);
  CHECK(f.f1 <= 1.0);
  CHECK(f.f2 <= 1.0);
  CHECK(f.fn0 == doctest::Approx((std::sqrt(f.f0) + std::sqrt(f.f1)) * (std::sqrt(f.f0) + std::sqrt(f.f1)) / 4.0));
  // f1 at lam -> 0 tends to alpha^2 / sinh(alpha^2), the overlap of |1> with the odd cat.
  CHECK(fidelity_formulas(0.5, 0.0).f1 == doctest::Approx(0.5 / std::sinh(0.5)));
  CHECK_THROWS_AS(fidelity_formulas(0.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(fidelity_formulas(1.0, 1.0), std::domain_error);
}

TEST_CASE("phase decay and enhanced Wigner value") {
  CHECK(phase_decay(0.0) == doctest::Approx(0.5));
  CHECK(phase_decay(1.0) == doctest::Approx(0.5 * std::exp(-0.5)));
  CHECK(w_enhanced(0.5) == doctest::Approx(0.0));
  CHECK(w_enhanced(1.0) == doctest::Approx(-1.0));
}

TEST_CASE("float instantiations") {
  CHECK(n_qubit_lossy(1.0f, 1.0f) == doctest::Approx(0.5));
  CHECK(phase_decay(0.0L) == doctest::Approx(0.5));
}
