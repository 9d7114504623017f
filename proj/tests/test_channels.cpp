#include "hybrid/channels.hpp"
#include "hybrid/states.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hybrid;

namespace {

double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("loss Kraus operators match the beam-splitter construction") {
  for (double eta : {0.0, 0.3, 0.75, 1.0}) {
    const auto fast = loss_kraus_operators(eta, 7);
    const auto slow = oracle::beam_splitter_kraus(eta, 7);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t k = 0; k < fast.size(); ++k) CHECK(max_diff(fast[k], slow[k]) < 1e-12);
  }
}

TEST_CASE("loss Kraus operators are complete") {
  const auto kraus = loss_kraus_operators(0.4, 9);
  CMatrix sum = CMatrix::Zero(9, 9);
  for (const CMatrix& k : kraus) sum += k.adjoint() * k;
  CHECK(max_diff(sum, CMatrix::Identity(9, 9)) < 1e-13);
  CHECK_THROWS(loss_kraus_operators(1.2, 4));
  CHECK_THROWS(loss_kraus_operators(-0.1, 4));
}

TEST_CASE("single photon under loss") {
  const DensityOperator one = DensityOperator::projector(fock_state(1, 3));
  const DensityOperator out = loss_channel(one, 0, 0.6);
  CHECK(out.matrix()(1, 1).real() == doctest::Approx(0.6));
  CHECK(out.matrix()(0, 0).real() == doctest::Approx(0.4));
  CHECK(std::abs(out.trace() - 1.0) < 1e-14);
}

TEST_CASE("coherent amplitude shrinks by sqrt(eta)") {
  const Index dim = 25;
  const DensityOperator out = loss_channel(DensityOperator::projector(coherent_state(1.5, dim)), 0, 0.5);
  const DensityOperator expected = DensityOperator::projector(coherent_state(1.5 * std::sqrt(0.5), dim));
  CHECK(max_diff(out.matrix(), expected.matrix()) < 1e-9);
}

TEST_CASE("loss acts per mode") {
  std::mt19937_64 rng(oracle::kSeed + 10);
  const DensityOperator rho(ModeSpace({3, 4}), oracle::random_density(rng, 12));
  const DensityOperator both = apply_loss(rho, {0.7, 0.4});
  const DensityOperator manual = loss_channel(loss_channel(rho, 1, 0.4), 0, 0.7);
  CHECK(max_diff(both.matrix(), manual.matrix()) < 1e-13);
  CHECK(apply_loss(rho, LossSpec::symmetric(1.0)).matrix() == rho.matrix());
  CHECK_THROWS(apply_loss(DensityOperator::projector(vacuum(3)), {0.5, 0.5}));
}

TEST_CASE("Gauss-Hermite rule reproduces normal moments") {
  const QuadratureRule rule = gauss_hermite_normal(12);
  CHECK(rule.weights.sum() == doctest::Approx(1.0));
  CHECK(rule.weights.dot(rule.nodes) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rule.weights.dot(rule.nodes.array().square().matrix()) == doctest::Approx(1.0));
  CHECK(rule.weights.dot(rule.nodes.array().pow(4).matrix()) == doctest::Approx(3.0));
  CHECK_THROWS(gauss_hermite_normal(0));
}

TEST_CASE("dephasing damps coherences by exp(-sigma^2 d^2 / 2)") {
  const Index dim = 4;
  CVector v = CVector::Constant(dim, 0.5);
  const DensityOperator rho = DensityOperator::projector(PureState(ModeSpace({dim}), v));
  const double sigma = 0.5;
  const DensityOperator out = dephase(rho, 0, {sigma, 21});
  for (Index m = 0; m < dim; ++m) {
    for (Index n = 0; n < dim; ++n) {
      const double d = static_cast<double>(m - n);
      CHECK(std::abs(out.matrix()(m, n) - 0.25 * std::exp(-sigma * sigma * d * d / 2.0)) < 1e-9);
    }
  }
}

TEST_CASE("pure-state phase averaging matches dephasing") {
  const double sigma = 0.3;
  const auto builder = [](double phi) {
    CVector v(2);
    v << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), phi);
    return PureState(ModeSpace({2}), v);
  };
  const DensityOperator avg = phase_noise_average(builder, {sigma, 21});
  const DensityOperator deph = dephase(DensityOperator::projector(builder(0.0)), 0, {sigma, 21});
  CHECK(max_diff(avg.matrix(), deph.matrix()) < 1e-12);
  CHECK(std::abs(avg.matrix()(1, 0)) == doctest::Approx(0.5 * std::exp(-sigma * sigma / 2.0)));
  const auto unnormalized = [](double) { return PureState(ModeSpace({2}), CVector::Ones(2)); };
  CHECK_THROWS(phase_noise_average(unnormalized, {sigma, 21}));
}
