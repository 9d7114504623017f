#include "hybrid/metrics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hybrid {

namespace {

CVector dv_basis_vector(DvBasis basis, Index k, Index dim) {
  CVector v = CVector::Zero(dim);
  if (basis == DvBasis::number) {
    if (k < 0 || k >= dim) throw std::out_of_range("hybrid_block: DV level beyond cutoff");
    v(k) = 1.0;
    return v;
  }
  if (k < 0 || k > 1) throw std::out_of_range("hybrid_block: rotated basis has two states");
  v(0) = 1.0 / std::numbers::sqrt2;
  v(1) = (k == 0 ? 1.0 : -1.0) / std::numbers::sqrt2;
  return v;
}

RVector linspace(double extent, Index points) {
  if (points < 2) throw std::invalid_argument("GridSpec: need at least two points per axis");
  return RVector::LinSpaced(points, -extent, extent);
}

}  // namespace

CMatrix displacement_elements(Complex gamma, Index dim) {
  const double x = std::norm(gamma);
  const double envelope = std::exp(-x / 2.0);
  CMatrix out = CMatrix::Zero(dim, dim);
  Complex power = 1.0;            // gamma^k
  Complex power_conj = 1.0;       // (-conj gamma)^k
  for (Index k = 0; k < dim; ++k) {
    // L_j^{(k)}(x) by the three-term recurrence in j.
    double prev = 0.0;
    double curr = 1.0;
    double log_ratio = -std::lgamma(static_cast<double>(k) + 1.0);  // log(j! / (j+k)!) at j = 0
    for (Index j = 0; j + k < dim; ++j) {
      if (j > 0) {
        const double jj = static_cast<double>(j - 1);
        const double next = ((2.0 * jj + 1.0 + static_cast<double>(k) - x) * curr -
                             (jj + static_cast<double>(k)) * prev) / (jj + 1.0);
        prev = curr;
        curr = next;
        log_ratio += std::log(static_cast<double>(j)) - std::log(static_cast<double>(j + k));
      }
      const double scale = std::exp(0.5 * log_ratio) * envelope * curr;
      out(j + k, j) = scale * power;
      if (k > 0) out(j, j + k) = scale * power_conj;
    }
    power *= gamma;
    power_conj *= -std::conj(gamma);
  }
  return out;
}

Complex wigner_value(const CMatrix& op, double x, double p) {
  if (op.rows() != op.cols()) throw std::invalid_argument("wigner_value: operator must be square");
  const CMatrix d = displacement_elements(Complex(x, p), op.rows());
  // Tr[op D(gamma) P] = sum_{m,n} op(m, n) (-1)^m <n|D|m>.
  Complex acc = 0.0;
  for (Index m = 0; m < op.rows(); ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    acc += sign * op.row(m).transpose().cwiseProduct(d.col(m)).sum();
  }
  return acc;
}

Complex wigner_value(const DensityOperator& op, double x, double p) {
  if (op.space().mode_count() != 1) throw std::invalid_argument("wigner_value: single-mode operator expected");
  return wigner_value(op.matrix(), x, p);
}

WignerGrid wigner_grid(const CMatrix& op, const GridSpec& grid) {
  WignerGrid out;
  out.x_axis = linspace(grid.extent, grid.points);
  out.p_axis = out.x_axis;
  out.values.resize(grid.points, grid.points);
  for (Index i = 0; i < grid.points; ++i) {
    for (Index j = 0; j < grid.points; ++j) out.values(i, j) = wigner_value(op, out.x_axis(i), out.p_axis(j));
  }
  return out;
}

double wigner_origin_negativity(const DensityOperator& rho, Index mode) {
  const Index keep[] = {mode};
  const DensityOperator reduced = rho.space().mode_count() == 1 ? rho : partial_trace(rho, keep);
  const CMatrix& m = reduced.matrix();
  Complex acc = 0.0;
  for (Index n = 0; n < m.rows(); ++n) acc += ((n % 2 == 0) ? 1.0 : -1.0) * m(n, n);
  return (acc / reduced.trace()).real();
}

DensityOperator hybrid_block(const DensityOperator& rho, Index k, Index l, DvBasis basis) {
  const ModeSpace& space = rho.space();
  if (space.mode_count() != 2) throw std::invalid_argument("hybrid_block: two-mode operator expected");
  const Index da = space.dim(0);
  const Index db = space.dim(1);
  const CVector vk = dv_basis_vector(basis, k, da);
  const CVector vl = dv_basis_vector(basis, l, da);
  CMatrix block = CMatrix::Zero(db, db);
  for (Index a = 0; a < da; ++a) {
    if (vk(a) == Complex(0.0)) continue;
    for (Index b = 0; b < da; ++b) {
      if (vl(b) == Complex(0.0)) continue;
      block += std::conj(vk(a)) * vl(b) * rho.matrix().block(a * db, b * db, db, db);
    }
  }
  const bool diagonal = k == l && rho.is_hermitian();
  if (diagonal) block = (block + block.adjoint()) / 2.0;
  return DensityOperator(ModeSpace({db}), std::move(block), diagonal);
}

double block_origin_value(const DensityOperator& rho, Index k, DvBasis basis) {
  return wigner_origin_negativity(hybrid_block(rho, k, k, basis), 0);
}

RVector dv_populations(const DensityOperator& rho) {
  const Index keep[] = {0};
  const DensityOperator reduced = partial_trace(rho, keep);
  return reduced.matrix().diagonal().real();
}

double entanglement_negativity(const DensityOperator& rho, std::span<const Index> transposed_modes) {
  if (!rho.is_hermitian()) throw std::invalid_argument("entanglement_negativity: hermitian input expected");
  const RVector spectrum = hermitian_eigenvalues(partial_transpose(rho, transposed_modes).matrix());
  return 0.5 * (spectrum.cwiseAbs() - spectrum).sum();
}

double entanglement_negativity(const DensityOperator& rho) {
  const Index modes[] = {0};
  return entanglement_negativity(rho, modes);
}

double fidelity(const PureState& a, const PureState& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("fidelity: states live in different spaces");
  const double overlap = std::norm(a.amplitudes().dot(b.amplitudes()));
  return overlap / (a.amplitudes().squaredNorm() * b.amplitudes().squaredNorm());
}

double fidelity(const PureState& a, const DensityOperator& rho) {
  if (!(a.space() == rho.space())) throw std::invalid_argument("fidelity: state and operator spaces differ");
  const CVector& v = a.amplitudes();
  const Complex value = v.dot(rho.matrix() * v);
  return value.real() / (v.squaredNorm() * rho.trace().real());
}

HybridBlockGrid hybrid_blocks(const DensityOperator& rho, DvBasis basis, const GridSpec& grid, Index levels) {
  if (rho.space().mode_count() != 2) throw std::invalid_argument("hybrid_blocks: two-mode operator expected");
  if (levels == 0) levels = rho.space().dim(0);
  if (levels != 2 && levels != 3) {
    throw std::invalid_argument("hybrid_blocks: DV dimension must be 2 or 3, got " + std::to_string(levels));
  }
  if (basis == DvBasis::rotated && levels != 2) {
    throw std::invalid_argument("hybrid_blocks: the rotated basis is defined for qubits only");
  }
  if (levels > rho.space().dim(0)) throw std::invalid_argument("hybrid_blocks: more levels than the DV cutoff");
  HybridBlockGrid out;
  out.basis = basis;
  out.levels = levels;
  for (Index k = 0; k < levels; ++k) {
    for (Index l = 0; l < levels; ++l) {
      out.blocks.push_back(wigner_grid(hybrid_block(rho, k, l, basis).matrix(), grid));
    }
  }
  return out;
}

double grid_centroid_x(const WignerGrid& grid) {
  const Eigen::MatrixXd w = grid.values.real();
  const double total = w.sum();
  if (total == 0.0) throw std::domain_error("grid_centroid_x: grid integrates to zero");
  return (grid.x_axis.asDiagonal() * w).sum() / total;
}

Complex grid_integral(const WignerGrid& grid) {
  const double dx = grid.x_axis(1) - grid.x_axis(0);
  const double dp = grid.p_axis(1) - grid.p_axis(0);
  return grid.values.sum() * dx * dp / (2.0 * std::numbers::pi);
}

}  // namespace hybrid
