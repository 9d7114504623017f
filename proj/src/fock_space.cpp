#include "hybrid/fock_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hybrid {

namespace {

void require_mode(const ModeSpace& space, Index mode, const char* where) {
  if (mode < 0 || mode >= space.mode_count()) {
    throw std::out_of_range(std::string(where) + ": mode index out of range");
  }
}

// Full flat index of every (kept, traced) combination, kept-major.
std::vector<Index> split_table(const ModeSpace& space, std::span<const Index> keep,
                               std::span<const Index> traced) {
  const auto strides = space.strides();
  auto enumerate = [&](std::span<const Index> modes) {
    std::vector<Index> offsets{0};
    for (Index m : modes) {
      std::vector<Index> next;
      next.reserve(offsets.size() * static_cast<std::size_t>(space.dim(m)));
      for (Index base : offsets) {
        for (Index n = 0; n < space.dim(m); ++n) next.push_back(base + n * strides[m]);
      }
      offsets = std::move(next);
    }
    return offsets;
  };
  const auto kept = enumerate(keep);
  const auto rest = enumerate(traced);
  std::vector<Index> table;
  table.reserve(kept.size() * rest.size());
  for (Index k : kept) {
    for (Index t : rest) table.push_back(k + t);
  }
  return table;
}

std::vector<Index> complement(Index mode_count, std::span<const Index> modes) {
  std::vector<Index> out;
  for (Index m = 0; m < mode_count; ++m) {
    if (std::find(modes.begin(), modes.end(), m) == modes.end()) out.push_back(m);
  }
  return out;
}

void require_distinct(const ModeSpace& space, std::span<const Index> modes, const char* where) {
  std::vector<Index> sorted(modes.begin(), modes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument(std::string(where) + ": repeated mode");
  }
  for (Index m : sorted) require_mode(space, m, where);
}

}  // namespace

// ---------------------------------------------------------------------------
// ModeSpace

ModeSpace::ModeSpace(std::vector<Index> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("ModeSpace: at least one mode required");
  for (Index d : dims_) {
    if (d < 2) throw std::invalid_argument("ModeSpace: each mode needs dimension >= 2");
  }
}

ModeSpace ModeSpace::uniform(Index mode_count, Index dim) {
  if (mode_count < 1) throw std::invalid_argument("ModeSpace: mode_count must be positive");
  return ModeSpace(std::vector<Index>(static_cast<std::size_t>(mode_count), dim));
}

Index ModeSpace::dim(Index mode) const {
  require_mode(*this, mode, "ModeSpace::dim");
  return dims_[static_cast<std::size_t>(mode)];
}

Index ModeSpace::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), Index{1}, std::multiplies<>());
}

std::vector<Index> ModeSpace::strides() const {
  std::vector<Index> s(dims_.size(), 1);
  for (std::size_t k = dims_.size(); k-- > 1;) s[k - 1] = s[k] * dims_[k];
  return s;
}

ModeSpace ModeSpace::concat(const ModeSpace& other) const {
  std::vector<Index> d = dims_;
  d.insert(d.end(), other.dims_.begin(), other.dims_.end());
  return ModeSpace(std::move(d));
}

ModeSpace ModeSpace::select(std::span<const Index> modes) const {
  std::vector<Index> d;
  for (Index m : modes) d.push_back(dim(m));
  return ModeSpace(std::move(d));
}

Index ModeSpace::flat_index(std::span<const Index> occupation) const {
  if (static_cast<Index>(occupation.size()) != mode_count()) {
    throw std::invalid_argument("ModeSpace::flat_index: wrong number of modes");
  }
  Index flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (occupation[k] < 0 || occupation[k] >= dims_[k]) {
      throw std::out_of_range("ModeSpace::flat_index: occupation beyond cutoff");
    }
    flat = flat * dims_[k] + occupation[k];
  }
  return flat;
}

std::vector<Index> ModeSpace::occupation(Index flat) const {
  std::vector<Index> occ(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    occ[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return occ;
}

// ---------------------------------------------------------------------------
// PureState / DensityOperator

PureState::PureState(ModeSpace space, CVector amplitudes, double norm_weight)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)), norm_weight_(norm_weight) {
  if (amplitudes_.size() != space_.total_dim()) {
    throw std::invalid_argument("PureState: amplitude count does not match the mode space");
  }
  if (!(norm_weight_ >= 0.0)) throw std::invalid_argument("PureState: negative norm weight");
}

bool PureState::is_normalized(double tol) const {
  return std::abs(amplitudes_.squaredNorm() - 1.0) <= tol;
}

PureState PureState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("PureState::normalized: zero vector");
  return PureState(space_, amplitudes_ / n, norm_weight_);
}

Complex PureState::amplitude(std::span<const Index> occupation) const {
  return amplitudes_(space_.flat_index(occupation));
}

DensityOperator::DensityOperator(ModeSpace space, CMatrix matrix, bool hermitian)
    : space_(std::move(space)), matrix_(std::move(matrix)), hermitian_(hermitian) {
  const Index d = space_.total_dim();
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw std::invalid_argument("DensityOperator: matrix shape does not match the mode space");
  }
  if (hermitian_) {
    const double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * std::max(1.0, matrix_.cwiseAbs().maxCoeff())) {
      throw std::invalid_argument("DensityOperator: flagged hermitian but is not");
    }
  }
}

DensityOperator DensityOperator::projector(const PureState& state) {
  const CVector& v = state.amplitudes();
  return DensityOperator(state.space(), v * v.adjoint());
}

DensityOperator DensityOperator::normalized() const {
  const Complex tr = trace();
  if (std::abs(tr) == 0.0) throw std::domain_error("DensityOperator::normalized: zero trace");
  if (hermitian_) return DensityOperator(space_, matrix_ / tr.real(), true);
  return DensityOperator(space_, matrix_ / tr, false);
}

// ---------------------------------------------------------------------------
// Ladder operators

CMatrix annihilation(Index dim) {
  CMatrix a = CMatrix::Zero(dim, dim);
  for (Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

CMatrix creation(Index dim) { return annihilation(dim).adjoint(); }

CMatrix number_operator(Index dim) {
  CMatrix n = CMatrix::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

CMatrix parity_operator(Index dim) {
  CMatrix p = CMatrix::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
  return p;
}

CMatrix unitary_from_generator(const CMatrix& generator) {
  const CMatrix h = Complex(0.0, 1.0) * generator;
  const CMatrix herm = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
  const RVector& w = solver.eigenvalues();
  const CMatrix& v = solver.eigenvectors();
  CVector phases(w.size());
  for (Index k = 0; k < w.size(); ++k) phases(k) = std::polar(1.0, -w(k));
  return v * phases.asDiagonal() * v.adjoint();
}

// ---------------------------------------------------------------------------
// Tensor products and operator application

PureState tensor(const PureState& a, const PureState& b) {
  const CVector& x = a.amplitudes();
  const CVector& y = b.amplitudes();
  CVector out(x.size() * y.size());
  for (Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
  return PureState(a.space().concat(b.space()), std::move(out),
                   a.norm_weight() * b.norm_weight());
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  const CMatrix& x = a.matrix();
  const CMatrix& y = b.matrix();
  CMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Index i = 0; i < x.rows(); ++i) {
    for (Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return DensityOperator(a.space().concat(b.space()), std::move(out),
                         a.is_hermitian() && b.is_hermitian());
}

PureState apply_mode_operator(const PureState& state, const CMatrix& op, Index mode) {
  const ModeSpace& space = state.space();
  require_mode(space, mode, "apply_mode_operator");
  const Index d = space.dim(mode);
  if (op.rows() != d || op.cols() != d) {
    throw std::invalid_argument("apply_mode_operator: operator shape does not match the mode");
  }
  const Index inner = space.strides()[static_cast<std::size_t>(mode)];
  const Index outer = space.total_dim() / (d * inner);
  CVector out(state.amplitudes().size());
  const CMatrix opt = op.transpose();
  for (Index l = 0; l < outer; ++l) {
    Eigen::Map<const CMatrix> x(state.amplitudes().data() + l * d * inner, inner, d);
    Eigen::Map<CMatrix> y(out.data() + l * d * inner, inner, d);
    y.noalias() = x * opt;
  }
  return PureState(space, std::move(out), state.norm_weight());
}

PureState apply_two_mode_operator(const PureState& state, const CMatrix& op, Index first,
                                  Index second) {
  const ModeSpace& space = state.space();
  require_mode(space, first, "apply_two_mode_operator");
  require_mode(space, second, "apply_two_mode_operator");
  if (first == second) throw std::invalid_argument("apply_two_mode_operator: modes coincide");
  const Index d1 = space.dim(first);
  const Index d2 = space.dim(second);
  if (op.rows() != d1 * d2 || op.cols() != d1 * d2) {
    throw std::invalid_argument("apply_two_mode_operator: operator shape does not match modes");
  }
  const auto strides = space.strides();
  const Index s1 = strides[static_cast<std::size_t>(first)];
  const Index s2 = strides[static_cast<std::size_t>(second)];
  const Index total = space.total_dim();

  std::vector<Index> bases;
  bases.reserve(static_cast<std::size_t>(total / (d1 * d2)));
  for (Index flat = 0; flat < total; ++flat) {
    if ((flat / s1) % d1 == 0 && (flat / s2) % d2 == 0) bases.push_back(flat);
  }
  std::vector<Index> offsets(static_cast<std::size_t>(d1 * d2));
  for (Index p = 0; p < d1; ++p) {
    for (Index q = 0; q < d2; ++q) offsets[static_cast<std::size_t>(p * d2 + q)] = p * s1 + q * s2;
  }

  const Index cols = static_cast<Index>(bases.size());
  CMatrix gathered(d1 * d2, cols);
  const CVector& in = state.amplitudes();
  for (Index c = 0; c < cols; ++c) {
    const Index base = bases[static_cast<std::size_t>(c)];
    for (Index r = 0; r < d1 * d2; ++r) gathered(r, c) = in(base + offsets[static_cast<std::size_t>(r)]);
  }
  const CMatrix result = op * gathered;
  CVector out(total);
  for (Index c = 0; c < cols; ++c) {
    const Index base = bases[static_cast<std::size_t>(c)];
    for (Index r = 0; r < d1 * d2; ++r) out(base + offsets[static_cast<std::size_t>(r)]) = result(r, c);
  }
  return PureState(space, std::move(out), state.norm_weight());
}

CMatrix lift(const CMatrix& op, const ModeSpace& space, Index mode) {
  require_mode(space, mode, "lift");
  const Index d = space.dim(mode);
  if (op.rows() != d || op.cols() != d) {
    throw std::invalid_argument("lift: operator shape does not match the mode");
  }
  const Index inner = space.strides()[static_cast<std::size_t>(mode)];
  const Index outer = space.total_dim() / (d * inner);
  const Index total = space.total_dim();
  CMatrix full = CMatrix::Zero(total, total);
  for (Index l = 0; l < outer; ++l) {
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        if (op(i, j) == Complex(0.0)) continue;
        for (Index r = 0; r < inner; ++r) {
          full(l * d * inner + i * inner + r, l * d * inner + j * inner + r) = op(i, j);
        }
      }
    }
  }
  return full;
}

CMatrix apply_mode_left(const CMatrix& m, const CMatrix& op, const ModeSpace& space, Index mode) {
  require_mode(space, mode, "apply_mode_left");
  const Index d = space.dim(mode);
  if (op.rows() != d || op.cols() != d || m.rows() != space.total_dim()) {
    throw std::invalid_argument("apply_mode_left: shape mismatch");
  }
  const Index inner = space.strides()[static_cast<std::size_t>(mode)];
  const Index outer = space.total_dim() / (d * inner);
  const CMatrix opt = op.transpose();
  CMatrix out(m.rows(), m.cols());
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index l = 0; l < outer; ++l) {
      Eigen::Map<const CMatrix> x(m.col(c).data() + l * d * inner, inner, d);
      Eigen::Map<CMatrix> y(out.col(c).data() + l * d * inner, inner, d);
      y.noalias() = x * opt;
    }
  }
  return out;
}

DensityOperator conjugate(const DensityOperator& rho, const CMatrix& op, Index mode) {
  const ModeSpace& space = rho.space();
  const CMatrix left = apply_mode_left(rho.matrix(), op, space, mode);
  CMatrix out = apply_mode_left(left.adjoint(), op, space, mode).adjoint();
  if (rho.is_hermitian()) out = (out + out.adjoint()) / 2.0;
  return DensityOperator(space, std::move(out), rho.is_hermitian());
}

PureState permute_modes(const PureState& state, std::span<const Index> order) {
  const ModeSpace& space = state.space();
  if (static_cast<Index>(order.size()) != space.mode_count()) {
    throw std::invalid_argument("permute_modes: order must list every mode once");
  }
  require_distinct(space, order, "permute_modes");
  const ModeSpace target = space.select(order);
  const auto old_strides = space.strides();
  // Walk the new layout in order, tracking the matching old index incrementally.
  const Index total = space.total_dim();
  const std::size_t m = order.size();
  std::vector<Index> digits(m, 0);
  std::vector<Index> step(m);
  for (std::size_t k = 0; k < m; ++k) step[k] = old_strides[static_cast<std::size_t>(order[k])];
  CVector out(total);
  Index old_index = 0;
  for (Index flat = 0; flat < total; ++flat) {
    out(flat) = state.amplitudes()(old_index);
    for (std::size_t k = m; k-- > 0;) {
      if (++digits[k] < target.dims()[k]) {
        old_index += step[k];
        break;
      }
      old_index -= step[k] * (digits[k] - 1);
      digits[k] = 0;
    }
  }
  return PureState(target, std::move(out), state.norm_weight());
}

PureState project(const PureState& state, Index mode, Index photons) {
  const ModeSpace& space = state.space();
  require_mode(space, mode, "project");
  if (space.mode_count() < 2) throw std::invalid_argument("project: need at least two modes");
  const Index d = space.dim(mode);
  if (photons < 0 || photons >= d) throw TruncationError("project: photon number beyond cutoff");
  const Index inner = space.strides()[static_cast<std::size_t>(mode)];
  const Index outer = space.total_dim() / (d * inner);
  CVector out(outer * inner);
  for (Index l = 0; l < outer; ++l) {
    out.segment(l * inner, inner) = state.amplitudes().segment(l * d * inner + photons * inner, inner);
  }
  std::vector<Index> rest;
  for (Index k = 0; k < space.mode_count(); ++k) {
    if (k != mode) rest.push_back(k);
  }
  return PureState(space.select(rest), std::move(out), state.norm_weight());
}

PureState embed(const PureState& state, const ModeSpace& target) {
  const ModeSpace& space = state.space();
  if (target.mode_count() != space.mode_count()) {
    throw std::invalid_argument("embed: mode counts differ");
  }
  for (Index k = 0; k < space.mode_count(); ++k) {
    if (target.dim(k) < space.dim(k)) throw std::invalid_argument("embed: target is smaller");
  }
  CVector out = CVector::Zero(target.total_dim());
  for (Index flat = 0; flat < space.total_dim(); ++flat) {
    out(target.flat_index(space.occupation(flat))) = state.amplitudes()(flat);
  }
  return PureState(target, std::move(out), state.norm_weight());
}

DensityOperator reduced_density(const PureState& state, std::span<const Index> keep) {
  const ModeSpace& space = state.space();
  if (keep.empty()) throw std::invalid_argument("reduced_density: keep set is empty");
  require_distinct(space, keep, "reduced_density");
  std::vector<Index> order(keep.begin(), keep.end());
  const auto traced = complement(space.mode_count(), keep);
  order.insert(order.end(), traced.begin(), traced.end());
  const PureState permuted = permute_modes(state, order);
  const Index kept_dim = space.select(keep).total_dim();
  const Index traced_dim = space.total_dim() / kept_dim;
  Eigen::Map<const CMatrix> m(permuted.amplitudes().data(), traced_dim, kept_dim);
  CMatrix rho = m.transpose() * m.conjugate();
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityOperator(space.select(keep), std::move(rho));
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const Index> keep) {
  const ModeSpace& space = rho.space();
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  require_distinct(space, keep, "partial_trace");
  const auto traced = complement(space.mode_count(), keep);
  const auto table = split_table(space, keep, traced);
  const ModeSpace out_space = space.select(keep);
  const Index dk = out_space.total_dim();
  const Index dt = space.total_dim() / dk;
  const CMatrix& m = rho.matrix();
  CMatrix out = CMatrix::Zero(dk, dk);
  for (Index i = 0; i < dk; ++i) {
    for (Index j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (Index t = 0; t < dt; ++t) {
        acc += m(table[static_cast<std::size_t>(i * dt + t)], table[static_cast<std::size_t>(j * dt + t)]);
      }
      out(i, j) = acc;
    }
  }
  if (rho.is_hermitian()) out = (out + out.adjoint()) / 2.0;
  return DensityOperator(out_space, std::move(out), rho.is_hermitian());
}

DensityOperator partial_transpose(const DensityOperator& rho, std::span<const Index> modes) {
  const ModeSpace& space = rho.space();
  require_distinct(space, modes, "partial_transpose");
  const Index total = space.total_dim();
  const auto strides = space.strides();
  // Per flat index, the contribution of the transposed modes' digits.
  std::vector<Index> part(static_cast<std::size_t>(total), 0);
  for (Index flat = 0; flat < total; ++flat) {
    Index acc = 0;
    for (Index m : modes) acc += ((flat / strides[m]) % space.dim(m)) * strides[m];
    part[static_cast<std::size_t>(flat)] = acc;
  }
  const CMatrix& in = rho.matrix();
  CMatrix out(total, total);
  for (Index j = 0; j < total; ++j) {
    const Index pj = part[static_cast<std::size_t>(j)];
    for (Index i = 0; i < total; ++i) {
      const Index pi = part[static_cast<std::size_t>(i)];
      out(i - pi + pj, j - pj + pi) = in(i, j);
    }
  }
  return DensityOperator(space, std::move(out), rho.is_hermitian());
}

}  // namespace hybrid
