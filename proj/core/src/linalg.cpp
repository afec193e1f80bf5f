#include "zeno/linalg.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream msg;
    msg << what << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw InvalidMatrix(msg.str());
  }
}

}  // namespace

double hermiticity_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_error(m) <= tol; }

EigenSystem hermitian_eig(const ComplexMatrix& h) {
  require_square(h, "hermitian_eig");
  const double err = hermiticity_error(h);
  if (!(err <= kAlgebraicTol)) {
    std::ostringstream msg;
    msg << "hermitian_eig: matrix is not Hermitian (max |H - H^dagger| = " << err << ")";
    throw InvalidMatrix(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw InvalidMatrix("hermitian_eig: eigensolver did not converge");
  }
  // SelfAdjointEigenSolver already sorts ascending.
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix unitary_from_eigensystem(const EigenSystem& eig, double t) {
  const Eigen::Index n = eig.values.size();
  ComplexVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::polar(1.0, -eig.values(k) * t);
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double t) {
  if (!std::isfinite(t)) throw InvalidParams("unitary_from_hamiltonian: time must be finite");
  return unitary_from_eigensystem(hermitian_eig(h), t);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

StateVector::StateVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  const double norm = amplitudes_.norm();
  if (amplitudes_.size() == 0 || !(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidParams("StateVector: amplitudes must be finite and not all zero");
  }
  amplitudes_ /= norm;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw IndexError("StateVector::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  require_square(m_, "DensityMatrix");
  const double herm = hermiticity_error(m_);
  if (!(herm <= kAlgebraicTol)) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (max |rho - rho^dagger| = " << herm << ")";
    throw InvalidMatrix(msg.str());
  }
  const double tr = m_.trace().real();
  if (!(std::abs(tr - 1.0) <= kAlgebraicTol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "DensityMatrix: trace is " << tr << ", expected 1";
    throw InvalidMatrix(msg.str());
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::basis(std::size_t dim, std::size_t index) {
  return pure(StateVector::basis(dim, index));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw InvalidParams("DensityMatrix::maximally_mixed: dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::diagonal(const RealVector& populations) {
  return DensityMatrix(populations.cast<Complex>().asDiagonal().toDenseMatrix());
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

DensityMatrix conjugate(const ComplexMatrix& u, const DensityMatrix& rho) {
  if (u.rows() != u.cols() || static_cast<std::size_t>(u.cols()) != rho.dim()) {
    throw DimensionError("conjugate: propagator and density matrix dimensions differ");
  }
  ComplexMatrix out = u * rho.matrix() * u.adjoint();
  // Round-off leaves ~1e-16 anti-Hermitian residue; project it out.
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace_apparatus(const DensityMatrix& rho, std::size_t system_dim,
                                      std::size_t apparatus_dim) {
  if (system_dim == 0 || apparatus_dim == 0 || rho.dim() != system_dim * apparatus_dim) {
    std::ostringstream msg;
    msg << "partial_trace_apparatus: density matrix of dim " << rho.dim()
        << " cannot be split as " << system_dim << " x " << apparatus_dim;
    throw DimensionError(msg.str());
  }
  const auto ls = static_cast<Eigen::Index>(system_dim);
  const auto na = static_cast<Eigen::Index>(apparatus_dim);
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(ls, ls);
  for (Eigen::Index n = 0; n < ls; ++n) {
    for (Eigen::Index k = 0; k < ls; ++k) {
      Complex acc = 0.0;
      for (Eigen::Index a = 0; a < na; ++a) acc += m(n * na + a, k * na + a);
      out(n, k) = acc;
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix reduce_after_premeasurement(const ComplexMatrix& isometry, const DensityMatrix& rho,
                                          std::size_t apparatus_dim) {
  const auto na = static_cast<Eigen::Index>(apparatus_dim);
  if (na == 0 || isometry.cols() != static_cast<Eigen::Index>(rho.dim()) ||
      isometry.rows() != isometry.cols() * na) {
    throw DimensionError("reduce_after_premeasurement: isometry shape does not match state");
  }
  const Eigen::Index ls = isometry.cols();
  const ComplexMatrix kr = isometry * rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(ls, ls);
  for (Eigen::Index a = 0; a < na; ++a) {
    // Rows of the isometry that carry apparatus label a.
    ComplexMatrix rows_a(ls, ls);
    ComplexMatrix kr_a(ls, ls);
    for (Eigen::Index n = 0; n < ls; ++n) {
      rows_a.row(n) = isometry.row(n * na + a);
      kr_a.row(n) = kr.row(n * na + a);
    }
    out.noalias() += kr_a * rows_a.adjoint();
  }
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("trace_distance: dimensions differ");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix() - sigma.matrix(),
                                                      Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace zeno
