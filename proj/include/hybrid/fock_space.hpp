#ifndef HYBRID_FOCK_SPACE_HPP
#define HYBRID_FOCK_SPACE_HPP

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hybrid {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Raised when a Fock cutoff is too small for the requested state or operator.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tensor product of truncated Fock modes. Mode 0 is the most significant
/// digit of the flat basis index, so the layout matches a Kronecker product.
class ModeSpace {
 public:
  ModeSpace() = default;
  explicit ModeSpace(std::vector<Index> dims);

  static ModeSpace uniform(Index mode_count, Index dim);

  Index mode_count() const { return static_cast<Index>(dims_.size()); }
  Index dim(Index mode) const;
  const std::vector<Index>& dims() const { return dims_; }
  Index total_dim() const;
  std::vector<Index> strides() const;

  ModeSpace concat(const ModeSpace& other) const;
  ModeSpace select(std::span<const Index> modes) const;

  Index flat_index(std::span<const Index> occupation) const;
  std::vector<Index> occupation(Index flat) const;

  bool operator==(const ModeSpace&) const = default;

 private:
  std::vector<Index> dims_;
};

class PureState {
 public:
  PureState(ModeSpace space, CVector amplitudes, double norm_weight = 1.0);

  const ModeSpace& space() const { return space_; }
  const CVector& amplitudes() const { return amplitudes_; }
  /// Unnormalized weight carried along with the amplitudes (e.g. a herald amplitude).
  double norm_weight() const { return norm_weight_; }

  double norm() const { return amplitudes_.norm(); }
  bool is_normalized(double tol = 1e-10) const;
  PureState normalized() const;

  Complex amplitude(std::span<const Index> occupation) const;

 private:
  ModeSpace space_;
  CVector amplitudes_;
  double norm_weight_;
};

class DensityOperator {
 public:
  DensityOperator(ModeSpace space, CMatrix matrix, bool hermitian = true);

  static DensityOperator projector(const PureState& state);

  const ModeSpace& space() const { return space_; }
  const CMatrix& matrix() const { return matrix_; }
  bool is_hermitian() const { return hermitian_; }

  Complex trace() const { return matrix_.trace(); }
  DensityOperator normalized() const;

 private:
  ModeSpace space_;
  CMatrix matrix_;
  bool hermitian_;
};

// Single-mode ladder operators on {|0>, ..., |dim-1>}.
CMatrix annihilation(Index dim);
CMatrix creation(Index dim);
CMatrix number_operator(Index dim);
CMatrix parity_operator(Index dim);

/// exp(G) for an anti-Hermitian generator G, via the spectrum of iG.
CMatrix unitary_from_generator(const CMatrix& generator);

PureState tensor(const PureState& a, const PureState& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

PureState apply_mode_operator(const PureState& state, const CMatrix& op, Index mode);
/// `op` acts on modes (first, second) with `first` as the more significant digit.
PureState apply_two_mode_operator(const PureState& state, const CMatrix& op, Index first,
                                  Index second);

/// Kronecker-embeds a single-mode operator into the full space.
CMatrix lift(const CMatrix& op, const ModeSpace& space, Index mode);
/// op (acting on one mode) times every column of m.
CMatrix apply_mode_left(const CMatrix& m, const CMatrix& op, const ModeSpace& space, Index mode);
/// O rho O^dagger with O acting on one mode.
DensityOperator conjugate(const DensityOperator& rho, const CMatrix& op, Index mode);

/// Reorders modes: new mode k is old mode order[k].
PureState permute_modes(const PureState& state, std::span<const Index> order);

/// <n|_mode |psi>, returned over the remaining modes (unnormalized).
PureState project(const PureState& state, Index mode, Index photons);

/// Zero-pads each mode up to the dimensions of `target`.
PureState embed(const PureState& state, const ModeSpace& target);

/// Reduced density operator keeping `keep` in the given order.
DensityOperator reduced_density(const PureState& state, std::span<const Index> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::span<const Index> keep);
DensityOperator partial_transpose(const DensityOperator& rho, std::span<const Index> modes);

/// Ascending eigenvalues of a Hermitian matrix. Throws std::invalid_argument
/// when the input deviates from hermiticity by more than 1e-8.
template <typename Derived>
RVector hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
  }
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (m.rows() > 0 && asym > 1e-8) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not hermitian (deviation " +
                                std::to_string(asym) + ")");
  }
  using Scalar = typename Derived::Scalar;
  using Plain = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Plain h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Plain> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().template cast<double>();
}

}  // namespace hybrid

#endif  // HYBRID_FOCK_SPACE_HPP
