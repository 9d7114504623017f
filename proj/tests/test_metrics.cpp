#include "hybrid/metrics.hpp"
#include "hybrid/states.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numbers>

using namespace hybrid;

namespace {

// (|0,1> + |1,0>) / sqrt2 with a CV cutoff of `dim`.
DensityOperator bell(Index dim) {
  const PureState psi(ModeSpace({2, dim}), [&] {
    CVector v = CVector::Zero(2 * dim);
    v(1) = v(dim) = 1.0 / std::sqrt(2.0);
    return v;
  }());
  return DensityOperator::projector(psi);
}

}  // namespace

TEST_CASE("displacement matrix elements") {
  const Complex beta(0.4, -0.3);
  const CMatrix exact = displacement_elements(beta, 8);
  const CMatrix cropped = displacement_operator(beta, 8);
  CHECK((exact - cropped).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Wigner values of coherent and Fock states") {
  const Index dim = 30;
  const DensityOperator coh = DensityOperator::projector(coherent_state(0.8, dim));
  const DensityOperator one = DensityOperator::projector(fock_state(1, dim));
  for (const auto& [x, p] : {std::pair{0.0, 0.0}, {1.6, 0.0}, {0.5, -1.1}, {-2.0, 1.3}}) {
    CHECK(wigner_value(coh, x, p).real() == doctest::Approx(oracle::coherent_wigner(0.8, x, p)).epsilon(1e-10));
    CHECK(wigner_value(one, x, p).real() == doctest::Approx(oracle::single_photon_wigner(x, p)).epsilon(1e-10));
  }
  CHECK(wigner_value(DensityOperator::projector(vacuum(4)), 0.0, 0.0).real() == doctest::Approx(1.0));
}

TEST_CASE("Wigner grids integrate to the trace") {
  const Index dim = 20;
  const CMatrix rho = DensityOperator::projector(coherent_state(0.5, dim)).matrix();
  const WignerGrid grid = wigner_grid(rho, {7.0, 141});
  CHECK(grid.x_axis.size() == 141);
  CHECK(grid.x_axis(0) == doctest::Approx(-7.0));
  CHECK(grid_integral(grid).real() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(grid_centroid_x(grid) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("origin parity of a reduced mode") {
  const DensityOperator rho = DensityOperator::projector(tensor(fock_state(1, 3), vacuum(3)));
  CHECK(wigner_origin_negativity(rho, 0) == doctest::Approx(-1.0));
  CHECK(wigner_origin_negativity(rho, 1) == doctest::Approx(1.0));
}

TEST_CASE("hybrid blocks of a Bell-like state") {
  const DensityOperator rho = bell(4);
  const DensityOperator b00 = hybrid_block(rho, 0, 0);
  CHECK(b00.space().dims() == std::vector<Index>{4});
  CHECK(b00.matrix()(1, 1).real() == doctest::Approx(0.5));
  CHECK(hybrid_block(rho, 0, 1).matrix()(1, 0).real() == doctest::Approx(0.5));
  CHECK(block_origin_value(rho, 0) == doctest::Approx(-1.0));
  CHECK(block_origin_value(rho, 1) == doctest::Approx(1.0));
  // <+|rho|+> is (|0> + |1>)/sqrt2 in the CV mode, whose parity vanishes.
  CHECK(block_origin_value(rho, 0, DvBasis::rotated) == doctest::Approx(0.0).epsilon(1e-14));
  const RVector pops = dv_populations(rho);
  CHECK(pops(0) == doctest::Approx(0.5));
  CHECK(pops(1) == doctest::Approx(0.5));
}

TEST_CASE("block grids") {
  const DensityOperator rho = bell(4);
  const HybridBlockGrid grid = hybrid_blocks(rho, DvBasis::number, {6.0, 41});
  CHECK(grid.blocks.size() == 4);
  CHECK(grid.block(0, 0).values(20, 20).real() == doctest::Approx(-0.5));
  CHECK(grid_integral(grid.block(1, 1)).real() == doctest::Approx(0.5).epsilon(1e-3));
  const DensityOperator qutrit(ModeSpace({3, 4}), CMatrix::Identity(12, 12) / 12.0);
  CHECK(hybrid_blocks(qutrit, DvBasis::number, {3.0, 5}).blocks.size() == 9);
  CHECK_THROWS(hybrid_blocks(qutrit, DvBasis::rotated, {3.0, 5}));
}

TEST_CASE("entanglement negativity") {
  CHECK(entanglement_negativity(bell(3)) == doctest::Approx(0.5));
  const DensityOperator product = DensityOperator::projector(tensor(fock_state(1, 2), coherent_state(0.3, 12)));
  CHECK(entanglement_negativity(product) == doctest::Approx(0.0).epsilon(1e-12));
  const std::vector<Index> cv{1};
  CHECK(entanglement_negativity(bell(3), cv) == doctest::Approx(0.5));
}

TEST_CASE("fidelity") {
  std::mt19937_64 rng(oracle::kSeed + 20);
  const PureState a = oracle::random_pure(rng, ModeSpace({2, 3}));
  const PureState b = oracle::random_pure(rng, ModeSpace({2, 3}));
  CHECK(fidelity(a, a) == doctest::Approx(1.0));
  CHECK(fidelity(a, b) == doctest::Approx(fidelity(a, DensityOperator::projector(b))));
  CHECK(fidelity(fock_state(0, 3), fock_state(1, 3)) == doctest::Approx(0.0));
  CHECK_THROWS(fidelity(fock_state(0, 3), fock_state(0, 4)));
}
