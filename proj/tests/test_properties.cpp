#include "hybrid/channels.hpp"
#include "hybrid/metrics.hpp"
#include "hybrid/schemes.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hybrid;

namespace {

constexpr int kTrials = 25;

double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("loss channels compose multiplicatively") {
  std::mt19937_64 rng(oracle::kSeed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < kTrials; ++trial) {
    const DensityOperator rho(ModeSpace({6}), oracle::random_density(rng, 6));
    const double a = u(rng);
    const double b = u(rng);
    const DensityOperator twice = loss_channel(loss_channel(rho, 0, a), 0, b);
    CHECK(max_diff(twice.matrix(), loss_channel(rho, 0, a * b).matrix()) < 1e-12);
  }
}

TEST_CASE("channels preserve trace and positivity") {
  std::mt19937_64 rng(oracle::kSeed + 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < kTrials; ++trial) {
    const DensityOperator rho(ModeSpace({3, 5}), oracle::random_density(rng, 15));
    const DensityOperator lossy = apply_loss(rho, {u(rng), u(rng)});
    CHECK(std::abs(lossy.trace() - 1.0) < 1e-12);
    CHECK(hermitian_eigenvalues(lossy.matrix()).minCoeff() > -1e-12);
    const DensityOperator noisy = dephase(rho, 0, {u(rng), 21});
    CHECK(std::abs(noisy.trace() - 1.0) < 1e-12);
    CHECK(hermitian_eigenvalues(noisy.matrix()).minCoeff() > -1e-12);
  }
}

TEST_CASE("partial transpose is a trace-preserving involution") {
  std::mt19937_64 rng(oracle::kSeed + 2);
  const std::vector<Index> mode{0};
  for (int trial = 0; trial < kTrials; ++trial) {
    const DensityOperator rho(ModeSpace({3, 4}), oracle::random_density(rng, 12));
    const DensityOperator pt = partial_transpose(rho, mode);
    CHECK(std::abs(pt.trace() - rho.trace()) < 1e-14);
    CHECK(max_diff(partial_transpose(pt, mode).matrix(), rho.matrix()) == 0.0);
  }
}

TEST_CASE("negativity bounds and monotonicity under loss") {
  std::mt19937_64 rng(oracle::kSeed + 3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < kTrials; ++trial) {
    const Index dv = trial % 2 == 0 ? 2 : 3;
    const PureState psi = oracle::random_pure(rng, ModeSpace({dv, 5}));
    const DensityOperator rho = DensityOperator::projector(psi);
    const double n = entanglement_negativity(rho);
    CHECK(n >= -1e-12);
    CHECK(n <= (static_cast<double>(dv) - 1.0) / 2.0 + 1e-12);
    const double eta = u(rng);
    CHECK(entanglement_negativity(apply_loss(rho, LossSpec::symmetric(eta))) <= n + 1e-10);
    CHECK(entanglement_negativity(dephase(rho, 0, {u(rng), 21})) <= n + 1e-10);
  }
}

TEST_CASE("perturbative states converge in the cutoff") {
  std::mt19937_64 rng(oracle::kSeed + 4);
  std::uniform_real_distribution<double> mu_dist(0.3, 3.0);
  std::uniform_real_distribution<double> db_dist(1.0, 6.0);
  for (int trial = 0; trial < 9; ++trial) {
    const Scheme scheme = static_cast<Scheme>(trial % 3);
    const double mu = mu_dist(rng);
    const SqueezeParam zeta = SqueezeParam::from_db(db_dist(rng));
    const Index dim = default_cv_dim(SourceSpec::squeezed(zeta));
    const double coarse = entanglement_negativity(scheme_perturbative(scheme, mu, zeta, dim).state);
    const double fine = entanglement_negativity(scheme_perturbative(scheme, mu, zeta, dim + 5).state);
    CHECK(std::abs(coarse - fine) < 1e-6);
  }
}
