#ifndef HYBRID_METRICS_HPP
#define HYBRID_METRICS_HPP

#include "hybrid/fock_space.hpp"

#include <vector>

namespace hybrid {

// Phase-space convention: x = a + a^dag, p = -i (a - a^dag), so the vacuum
// quadrature variance is one and a point (x, p) maps to beta = (x + i p) / 2.
// Wigner values are reported as Tr[op D(beta) P D(beta)^dag] with P the
// parity operator: vacuum -> +1 at the origin, |1> -> -1.

struct GridSpec {
  double extent = 4.0;  // axes span [-extent, extent]
  Index points = 81;
};

struct WignerGrid {
  RVector x_axis;
  RVector p_axis;
  CMatrix values;  // values(i, j) at (x_axis(i), p_axis(j))
};

/// <n| D(gamma) |m>, exact (no truncation), via associated Laguerre polynomials.
CMatrix displacement_elements(Complex gamma, Index dim);

/// Scaled Wigner value of a single-mode operator (possibly a non-Hermitian block).
Complex wigner_value(const CMatrix& op, double x, double p);
Complex wigner_value(const DensityOperator& op, double x, double p);

WignerGrid wigner_grid(const CMatrix& op, const GridSpec& grid = {});

/// Parity expectation of the reduced state of `mode`, normalized by the trace.
double wigner_origin_negativity(const DensityOperator& rho, Index mode);

enum class DvBasis { number, rotated };

/// <k|_A rho |l>_A for the DV mode 0 of a two-mode operator; the result acts on mode 1.
DensityOperator hybrid_block(const DensityOperator& rho, Index k, Index l,
                             DvBasis basis = DvBasis::number);

/// Wigner origin value of the normalized diagonal block <k|rho|k>.
double block_origin_value(const DensityOperator& rho, Index k, DvBasis basis = DvBasis::number);

/// Population of the DV levels, sum_n <k|rho_A|k>.
RVector dv_populations(const DensityOperator& rho);

/// 1/2 sum(|lambda_i| - lambda_i) over the spectrum of rho^{T_modes}.
double entanglement_negativity(const DensityOperator& rho, std::span<const Index> transposed_modes);
double entanglement_negativity(const DensityOperator& rho);

double fidelity(const PureState& a, const PureState& b);
double fidelity(const PureState& a, const DensityOperator& rho);

struct HybridBlockGrid {
  DvBasis basis = DvBasis::number;
  Index levels = 2;
  std::vector<WignerGrid> blocks;  // row-major, blocks[k * levels + l]

  const WignerGrid& block(Index k, Index l) const {
    return blocks[static_cast<std::size_t>(k * levels + l)];
  }
};

/// Wigner maps of every block <k|rho|l>, k, l < levels (2 or 3; rotated needs 2).
HybridBlockGrid hybrid_blocks(const DensityOperator& rho, DvBasis basis, const GridSpec& grid = {},
                              Index levels = 0);

/// Centroid of the real part of a grid, sum x W / sum W.
double grid_centroid_x(const WignerGrid& grid);
/// Riemann sum of W / (2 pi), which approximates the trace.
Complex grid_integral(const WignerGrid& grid);

}  // namespace hybrid

#endif  // HYBRID_METRICS_HPP
