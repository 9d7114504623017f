#include "hybrid/states.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numbers>

using namespace hybrid;

namespace {

double expect(const PureState& s, const CMatrix& op) {
  return (s.amplitudes().adjoint() * op * s.amplitudes())(0, 0).real();
}

}  // namespace

TEST_CASE("decibel convention") {
  const SqueezeParam s = SqueezeParam::from_db(3.0);
  CHECK(s.zeta() == doctest::Approx(3.0 * std::log(10.0) / 20.0));
  CHECK(s.db() == doctest::Approx(3.0));
  CHECK(s.c() == doctest::Approx(2.1281).epsilon(1e-4));
  CHECK(std::isinf(SqueezeParam(0.0).c()));
}

TEST_CASE("squeezed vacuum amplitudes and quadratures") {
  const SqueezeParam s(0.4);
  const Index dim = 40;
  const PureState sq(ModeSpace({dim}), squeeze_unitary(s, dim).col(0));
  const CVector& v = sq.amplitudes();
  CHECK(v(0).real() > 0.0);
  CHECK(std::abs(v(1)) < 1e-14);
  CHECK((v(2) / v(0)).real() == doctest::Approx(std::tanh(0.4) / std::sqrt(2.0)));
  const CMatrix a = annihilation(dim);
  const CMatrix x = a + a.adjoint();
  const CMatrix p = Complex(0.0, -1.0) * (a - a.adjoint());
  CHECK(expect(sq, x * x) == doctest::Approx(std::exp(0.8)).epsilon(1e-9));
  CHECK(expect(sq, p * p) == doctest::Approx(std::exp(-0.8)).epsilon(1e-9));
}

TEST_CASE("coherent and cat states") {
  const Index dim = 30;
  const PureState coh = coherent_state(1.2, dim);
  CHECK(coh.norm() == doctest::Approx(1.0));
  CHECK(expect(coh, number_operator(dim)) == doctest::Approx(1.44).epsilon(1e-9));
  const PureState odd = cat_state(1.2, CatParity::odd, dim);
  const PureState even = cat_state(1.2, CatParity::even, dim);
  for (Index n = 0; n < dim; n += 2) CHECK(std::abs(odd.amplitudes()(n)) < 1e-14);
  for (Index n = 1; n < dim; n += 2) CHECK(std::abs(even.amplitudes()(n)) < 1e-14);
  CHECK(std::abs(odd.amplitudes().dot(even.amplitudes())) < 1e-14);
  CHECK(cat_normalization(1.2, CatParity::even) == doctest::Approx(std::sqrt(2.0 * (1.0 + std::exp(-2.88)))));
  const PureState displaced(ModeSpace({dim}), displacement_operator(1.2, dim).col(0));
  CHECK((displaced.amplitudes() - coh.amplitudes()).norm() < 1e-10);
}

TEST_CASE("tail masses and cutoffs") {
  CHECK(coherent_tail_mass(1.0, 5) > coherent_tail_mass(1.0, 10));
  const Index dc = coherent_cutoff(1.5);
  CHECK(coherent_tail_mass(1.5, dc) < kCoherentTailLimit);
  CHECK(coherent_tail_mass(1.5, dc - 1) >= kCoherentTailLimit);
  const Index ds = squeezed_cutoff(0.35);
  CHECK(squeezed_vacuum_tail_mass(0.35, ds) < kSqueezedTailLimit);
  CHECK(squeezed_cutoff(0.35, 50) == 50);
  CHECK_THROWS_AS(fock_state(4, 4), TruncationError);
}

TEST_CASE("photon-subtracted squeezed states") {
  const SqueezeParam s(0.3);
  const Index dim = 30;
  const PureState s0 = subtracted_squeezed(0, s, dim);
  const PureState s1 = subtracted_squeezed(1, s, dim);
  const PureState s2 = subtracted_squeezed(2, s, dim);
  for (const PureState* st : {&s0, &s1, &s2}) CHECK(st->norm() == doctest::Approx(1.0));
  for (Index n = 0; n < dim; n += 2) CHECK(std::abs(s1.amplitudes()(n)) < 1e-14);
  const CVector a_s0 = annihilation(dim) * s0.amplitudes();
  CHECK(std::abs(std::abs(a_s0.normalized().dot(s1.amplitudes())) - 1.0) < 1e-10);
  // <n> of a squeezed vacuum is sinh^2.
  CHECK(a_s0.squaredNorm() == doctest::Approx(std::sinh(0.3) * std::sinh(0.3)).epsilon(1e-9));
}

TEST_CASE("beam splitter convention") {
  const double theta = 0.3;
  const CMatrix u = beam_splitter_unitary(theta, 0.0, 0.0, 4, 4);
  // |1,0> -> t|1,0> + r|0,1>.
  CHECK(u(1 * 4 + 0, 4).real() == doctest::Approx(std::cos(theta)));
  CHECK(u(0 * 4 + 1, 4).real() == doctest::Approx(std::sin(theta)));
  // |0,1> -> t|0,1> - r|1,0>.
  CHECK(u(4, 1).real() == doctest::Approx(-std::sin(theta)));
  const CMatrix hom = beam_splitter_unitary(std::numbers::pi / 4.0, 0.0, 0.0, 3, 3);
  CHECK(std::abs(hom(4, 4)) < 1e-14);
  CHECK(std::abs(hom(6, 4)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  const CMatrix ph = beam_splitter_unitary(0.0, 0.7, -0.2, 3, 3);
  CHECK(std::abs(ph(5, 5) - std::polar(1.0, 0.7 - 0.4)) < 1e-14);
}

TEST_CASE("beam splitter blocks match the dense series") {
  for (const auto& [dx, dy] : {std::pair<Index, Index>{3, 3}, {4, 2}, {2, 5}}) {
    const CMatrix fast = beam_splitter_unitary(0.4, 0.0, 0.0, dx, dy);
    const CMatrix slow = oracle::beam_splitter_taylor(0.4, dx, dy);
    CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((fast * fast.adjoint() - CMatrix::Identity(dx * dy, dx * dy)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("two-mode squeezed vacuum orders") {
  const TmssParam l(0.2);
  const PureState exact = tmss_state(l, TmssOrder::exact, 6);
  CHECK(exact.norm() == doctest::Approx(1.0));
  CHECK((exact.amplitudes()(7) / exact.amplitudes()(0)).real() == doctest::Approx(0.2));
  const PureState first = tmss_state(l, TmssOrder::first, 3, false);
  CHECK(first.amplitudes()(0).real() == 1.0);
  CHECK(first.amplitudes()(4).real() == doctest::Approx(0.2));
  CHECK_THROWS(TmssParam(1.0));
  CHECK_THROWS_AS(tmss_state(l, TmssOrder::second, 2), TruncationError);
}

TEST_CASE("annihilation keeps the norm as a weight") {
  const PureState f = fock_state(3, 5);
  const PureState a = annihilate(tensor(f, vacuum(2)), 0);
  CHECK(a.norm_weight() == doctest::Approx(std::sqrt(3.0)));
}
