#pragma once

// Dense complex linear algebra for small composite Hilbert spaces.
//
// Composite spaces are ordered system-major: the basis index of
// |n>|A_j> is n * apparatus_dim + j.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace zeno {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;

/// Largest entrywise |M - M^dagger|.
double hermiticity_error(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kAlgebraicTol);

/// Eigenvalues ascending, eigenvectors as unitary columns.
struct EigenSystem {
  RealVector values;
  ComplexMatrix vectors;
};

/// Throws InvalidMatrix if `h` is not square or not Hermitian within 1e-12.
EigenSystem hermitian_eig(const ComplexMatrix& h);

/// exp(-i H t) assembled from a precomputed eigensystem.
ComplexMatrix unitary_from_eigensystem(const EigenSystem& eig, double t);

/// exp(-i H t) for Hermitian H (hbar = 1).
ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double t);

/// Kronecker product, (A (x) B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Normalized pure state.
class StateVector {
 public:
  /// Normalizes `amplitudes`; throws InvalidParams for a zero or empty vector.
  explicit StateVector(ComplexVector amplitudes);

  /// Computational basis state |index> of dimension `dim`.
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, unit-trace square matrix.
///
/// Construction checks squareness, Hermiticity and trace at 1e-12. Positivity
/// needs an eigendecomposition and is checked on demand via
/// `min_eigenvalue()`.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix basis(std::size_t dim, std::size_t index);
  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix diagonal(const RealVector& populations);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  double trace() const { return m_.trace().real(); }
  double min_eigenvalue() const;

 private:
  ComplexMatrix m_;
};

/// U rho U^dagger, re-symmetrized. `u` must be square and unitary.
DensityMatrix conjugate(const ComplexMatrix& u, const DensityMatrix& rho);

/// Tr_A over the trailing (apparatus) factor.
DensityMatrix partial_trace_apparatus(const DensityMatrix& rho, std::size_t system_dim,
                                      std::size_t apparatus_dim);

/// Tr_A[K rho K^dagger] where K = U (I (x) |A_0>) is the (L*N x L) isometry
/// obtained by keeping every N-th column of the composite propagator.
DensityMatrix reduce_after_premeasurement(const ComplexMatrix& isometry, const DensityMatrix& rho,
                                          std::size_t apparatus_dim);

/// 1/2 sum |eig(rho - sigma)|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace zeno
