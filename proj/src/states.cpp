#include "hybrid/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hybrid {

namespace {

constexpr Index kMaxCutoff = 400;

double log_coherent_weight(double alpha2, Index n) {
  if (alpha2 == 0.0) return n == 0 ? 0.0 : -INFINITY;
  return -alpha2 + static_cast<double>(n) * std::log(alpha2) - std::lgamma(static_cast<double>(n) + 1.0);
}

double log_squeezed_weight(double zeta, Index k) {
  const double th = std::tanh(zeta);
  const double kk = static_cast<double>(k);
  return -std::log(std::cosh(zeta)) + 2.0 * kk * std::log(th) + std::lgamma(2.0 * kk + 1.0) -
         kk * std::log(4.0) - 2.0 * std::lgamma(kk + 1.0);
}

// Enlarged working cutoff for generator exponentials cropped back to `dim`.
Index working_cutoff(Index dim, double decay) {
  const double extra = decay >= 1.0 ? 40.0 : std::ceil(70.0 / -std::log(decay));
  return dim + std::clamp<Index>(static_cast<Index>(extra), 40, 3 * kMaxCutoff);
}

void check_dim(Index dim, const char* where) {
  if (dim < 2) throw std::invalid_argument(std::string(where) + ": dimension must be >= 2");
}

}  // namespace

SqueezeParam::SqueezeParam(double zeta) : zeta_(zeta) {
  if (!(zeta >= 0.0) || !std::isfinite(zeta)) {
    throw std::invalid_argument("SqueezeParam: zeta must be finite and non-negative");
  }
}

SqueezeParam SqueezeParam::from_db(double db) {
  return SqueezeParam(db * std::numbers::ln10 / 20.0);
}

double SqueezeParam::db() const { return 20.0 / std::numbers::ln10 * zeta_; }

double SqueezeParam::c() const { return 1.0 / (std::numbers::sqrt2 * std::tanh(zeta_)); }

TmssParam::TmssParam(double lambda_gain) : lambda_(lambda_gain) {
  if (!(lambda_gain >= 0.0 && lambda_gain < 1.0)) {
    throw std::invalid_argument("TmssParam: lambda must lie in [0, 1)");
  }
}

double coherent_tail_mass(double alpha, Index dim) {
  const double a2 = alpha * alpha;
  if (a2 == 0.0) return 0.0;
  double tail = 0.0;
  for (Index n = dim; n < dim + 4 * kMaxCutoff; ++n) {
    const double term = std::exp(log_coherent_weight(a2, n));
    tail += term;
    if (static_cast<double>(n) > a2 && term < 1e-30 * std::max(tail, 1e-300)) break;
  }
  return tail;
}

double squeezed_vacuum_tail_mass(double zeta, Index dim) {
  if (zeta == 0.0) return 0.0;
  double tail = 0.0;
  for (Index k = (dim + 1) / 2; k < dim + 8 * kMaxCutoff; ++k) {
    const double term = std::exp(log_squeezed_weight(zeta, k));
    tail += term;
    if (term < 1e-30 * std::max(tail, 1e-300) || term == 0.0) break;
  }
  return tail;
}

Index coherent_cutoff(double alpha, Index floor) {
  for (Index d = std::max<Index>(floor, 2); d <= kMaxCutoff; ++d) {
    if (coherent_tail_mass(alpha, d) < kCoherentTailLimit) return d;
  }
  throw TruncationError("coherent_cutoff: amplitude too large for the maximum cutoff");
}

Index squeezed_cutoff(double zeta, Index floor) {
  for (Index d = std::max<Index>(floor, 2); d <= kMaxCutoff; ++d) {
    if (squeezed_vacuum_tail_mass(zeta, d) < kSqueezedTailLimit) return d;
  }
  throw TruncationError("squeezed_cutoff: squeezing too strong for the maximum cutoff");
}

PureState vacuum(Index dim) { return fock_state(0, dim); }

PureState fock_state(Index n, Index dim) {
  check_dim(dim, "fock_state");
  if (n < 0 || n >= dim) throw TruncationError("fock_state: photon number beyond cutoff");
  CVector v = CVector::Zero(dim);
  v(n) = 1.0;
  return PureState(ModeSpace({dim}), std::move(v));
}

PureState coherent_state(double alpha, Index dim) {
  check_dim(dim, "coherent_state");
  const double tail = coherent_tail_mass(alpha, dim);
  if (tail >= kCoherentTailLimit) {
    throw TruncationError("coherent_state: tail mass " + std::to_string(tail) +
                          " above cutoff " + std::to_string(dim));
  }
  CVector v(dim);
  double amp = std::exp(-alpha * alpha / 2.0);
  for (Index n = 0; n < dim; ++n) {
    v(n) = amp;
    amp *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return PureState(ModeSpace({dim}), v / v.norm());
}

double cat_normalization(double alpha, CatParity parity) {
  const double overlap = std::exp(-2.0 * alpha * alpha);
  return std::sqrt(2.0 * (parity == CatParity::even ? 1.0 + overlap : 1.0 - overlap));
}

PureState cat_state(double alpha, CatParity parity, Index dim) {
  if (parity == CatParity::odd && alpha == 0.0) {
    throw std::domain_error("cat_state: odd cat is undefined at alpha = 0");
  }
  const CVector plus = coherent_state(alpha, dim).amplitudes();
  const CVector minus = coherent_state(-alpha, dim).amplitudes();
  CVector v = parity == CatParity::even ? CVector(plus + minus) : CVector(plus - minus);
  return PureState(ModeSpace({dim}), v / v.norm());
}

PureState annihilate(const PureState& state, Index mode) {
  const Index d = state.space().dim(mode);
  const PureState out = apply_mode_operator(state, annihilation(d), mode);
  return PureState(out.space(), out.amplitudes(), out.norm());
}

CMatrix squeeze_unitary(SqueezeParam zeta, Index dim) {
  check_dim(dim, "squeeze_unitary");
  if (zeta.zeta() == 0.0) return CMatrix::Identity(dim, dim);
  const double tail = squeezed_vacuum_tail_mass(zeta.zeta(), dim);
  if (tail >= kSqueezedTailLimit) {
    throw TruncationError("squeeze_unitary: squeezed vacuum tail " + std::to_string(tail) +
                          " above cutoff " + std::to_string(dim));
  }
  const Index work = working_cutoff(dim, std::sqrt(std::tanh(zeta.zeta())));
  const CMatrix a = annihilation(work);
  const CMatrix ad = a.adjoint();
  const CMatrix generator = (zeta.zeta() / 2.0) * (ad * ad - a * a);
  return unitary_from_generator(generator).topLeftCorner(dim, dim);
}

PureState subtracted_squeezed(int n_subtract, SqueezeParam zeta, Index dim) {
  if (n_subtract < 0 || n_subtract > 2) {
    throw std::invalid_argument("subtracted_squeezed: only 0, 1 or 2 subtractions");
  }
  if (n_subtract > 0 && zeta.zeta() == 0.0) {
    throw std::domain_error("subtracted_squeezed: photon subtraction needs zeta > 0");
  }
  const CMatrix s = squeeze_unitary(zeta, dim);
  CVector v;
  if (n_subtract == 0) {
    v = s.col(0);
  } else if (n_subtract == 1) {
    v = s.col(1);
  } else {
    const double sh = std::sinh(zeta.zeta());
    v = (std::cosh(zeta.zeta()) * s.col(0) + std::numbers::sqrt2 * sh * s.col(2)) /
        std::sqrt(1.0 + 3.0 * sh * sh);
  }
  return PureState(ModeSpace({dim}), v / v.norm());
}

CMatrix beam_splitter_unitary(double theta, double phi1, double phi2, Index dim_x, Index dim_y) {
  check_dim(dim_x, "beam_splitter_unitary");
  check_dim(dim_y, "beam_splitter_unitary");
  const Index total = dim_x * dim_y;
  CMatrix u = CMatrix::Zero(total, total);
  // The generator conserves p + q, so each photon-number block is exponentiated on its own.
  for (Index n = 0; n <= dim_x + dim_y - 2; ++n) {
    const Index lo = std::max<Index>(0, n - dim_y + 1);
    const Index hi = std::min(n, dim_x - 1);
    const Index size = hi - lo + 1;
    CMatrix g = CMatrix::Zero(size, size);
    for (Index i = 0; i + 1 < size; ++i) {
      // x y^dag moves |p, q> to |p-1, q+1> with amplitude sqrt(p (q+1)).
      const double p = static_cast<double>(lo + i + 1);
      const double amp = std::sqrt(p * static_cast<double>(n - lo - i));
      g(i, i + 1) = theta * amp;
      g(i + 1, i) = -theta * amp;
    }
    const CMatrix block = theta == 0.0 ? CMatrix::Identity(size, size) : unitary_from_generator(g);
    for (Index j = 0; j < size; ++j) {
      const Index pj = lo + j;
      const Complex phase = std::polar(1.0, phi1 * static_cast<double>(pj) + phi2 * static_cast<double>(n - pj));
      for (Index i = 0; i < size; ++i) {
        const Index pi = lo + i;
        u(pi * dim_y + (n - pi), pj * dim_y + (n - pj)) = block(i, j) * phase;
      }
    }
  }
  return u;
}

CMatrix displacement_operator(Complex beta, Index dim) {
  check_dim(dim, "displacement_operator");
  const Index work = dim + 60 + static_cast<Index>(std::ceil(8.0 * std::norm(beta)));
  const CMatrix a = annihilation(work);
  const CMatrix generator = beta * a.adjoint() - std::conj(beta) * a;
  return unitary_from_generator(generator).topLeftCorner(dim, dim);
}

CMatrix phase_rotation(double phi, Index dim) {
  CMatrix r = CMatrix::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) r(n, n) = std::polar(1.0, phi * static_cast<double>(n));
  return r;
}

PureState tmss_state(TmssParam lambda, TmssOrder order, Index dim, bool normalize) {
  check_dim(dim, "tmss_state");
  const double l = lambda.lambda_gain();
  CVector v = CVector::Zero(dim * dim);
  switch (order) {
    case TmssOrder::first:
      v(0) = 1.0;
      v(dim + 1) = l;
      break;
    case TmssOrder::second:
      if (dim < 3) throw TruncationError("tmss_state: second order needs dimension >= 3");
      v(0) = 1.0;
      v(dim + 1) = l;
      v(2 * dim + 2) = l * l;
      break;
    case TmssOrder::exact: {
      double amp = std::sqrt(1.0 - l * l);
      for (Index n = 0; n < dim; ++n) {
        v(n * dim + n) = amp;
        amp *= l;
      }
      break;
    }
  }
  if (normalize) v /= v.norm();
  return PureState(ModeSpace({dim, dim}), std::move(v));
}

}  // namespace hybrid
