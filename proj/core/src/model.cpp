#include "zeno/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "zeno/errors.hpp"

namespace zeno {

void ChainParams::validate() const {
  if (sites == 0) throw InvalidParams("chain needs at least one site");
  if (!std::isfinite(epsilon)) throw InvalidParams("epsilon must be finite");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidParams("gamma must be positive");
}

void ApparatusParams::validate() const {
  if (dim < 2) throw InvalidParams("apparatus dimension must be at least 2");
  if (!std::isfinite(g) || g < 0.0) throw InvalidParams("g must be finite and non-negative");
  if (!std::isfinite(delta)) throw InvalidParams("delta must be finite");
}

ComplexMatrix build_chain_hamiltonian(const ChainParams& p) {
  p.validate();
  const auto l = static_cast<Eigen::Index>(p.sites);
  ComplexMatrix h = ComplexMatrix::Zero(l, l);
  h(0, 0) = p.epsilon;
  for (Eigen::Index n = 0; n + 1 < l; ++n) {
    h(n, n + 1) = -p.gamma;
    h(n + 1, n) = -p.gamma;
  }
  return h;
}

ComplexMatrix build_apparatus_operator_2(double delta) {
  ComplexMatrix b(2, 2);
  b << delta, -0.5, -0.5, delta;
  return b;
}

ComplexMatrix conjugate_basis(std::size_t n) {
  if (n < 2) throw InvalidParams("apparatus dimension must be at least 2");
  const auto dim = static_cast<Eigen::Index>(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix f(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      // Reduce j*k mod N first so the phase argument stays small and exact.
      const auto jk = static_cast<double>((j * k) % dim);
      f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * jk / static_cast<double>(n));
    }
  }
  return f;
}

ComplexMatrix build_apparatus_operator_N(std::size_t n) {
  const ComplexMatrix f = conjugate_basis(n);
  RealVector spectrum(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) spectrum(static_cast<Eigen::Index>(k)) = static_cast<double>(k);
  ComplexMatrix b = f * spectrum.cast<Complex>().asDiagonal() * f.adjoint();
  return 0.5 * (b + b.adjoint());
}

ComplexMatrix hadamard_matrix() {
  const double s = 1.0 / std::numbers::sqrt2;
  ComplexMatrix h(2, 2);
  h << s, s, s, -s;
  return h;
}

HadamardPair hadamard_pair() {
  const ComplexMatrix h = hadamard_matrix();
  // Rows of the Hadamard matrix give |B_k> in terms of |A_0>, |A_1>.
  return {StateVector(h.row(0).transpose()), StateVector(h.row(1).transpose())};
}

double measurement_time(double g, std::size_t apparatus_dim) {
  if (!(g > 0.0) || !std::isfinite(g)) throw InvalidParams("measurement_time: g must be positive");
  if (apparatus_dim < 2) throw InvalidParams("measurement_time: apparatus dimension must be >= 2");
  if (apparatus_dim == 2) return std::numbers::pi / g;
  return 2.0 * std::numbers::pi / (g * static_cast<double>(apparatus_dim));
}

CompositeModel::CompositeModel(ComplexMatrix free_hamiltonian, ComplexMatrix observable,
                               ComplexMatrix apparatus_operator, double g)
    : h_free_(std::move(free_hamiltonian)),
      observable_(std::move(observable)),
      b_(std::move(apparatus_operator)),
      g_(g) {
  if (h_free_.rows() != h_free_.cols() || observable_.rows() != h_free_.rows() ||
      observable_.cols() != h_free_.cols() || b_.rows() != b_.cols() || h_free_.rows() == 0) {
    throw DimensionError("CompositeModel: operator dimensions are inconsistent");
  }
  if (!is_hermitian(h_free_) || !is_hermitian(observable_) || !is_hermitian(b_)) {
    throw InvalidMatrix("CompositeModel: all parts must be Hermitian");
  }
  if (!std::isfinite(g_)) throw InvalidParams("CompositeModel: g must be finite");
  const auto na = b_.rows();
  h_total_ = kron(h_free_, ComplexMatrix::Identity(na, na)) + g_ * kron(observable_, b_);
}

double CompositeModel::measurement_time() const { return zeno::measurement_time(g_, apparatus_dim()); }

CompositeModel build_total_hamiltonian(const ChainParams& chain, const ApparatusParams& apparatus) {
  chain.validate();
  apparatus.validate();
  const auto l = static_cast<Eigen::Index>(chain.sites);
  ComplexMatrix site0 = ComplexMatrix::Zero(l, l);
  site0(0, 0) = 1.0;
  ComplexMatrix b;
  if (apparatus.dim == 2) {
    b = build_apparatus_operator_2(apparatus.delta);
  } else {
    const auto na = static_cast<Eigen::Index>(apparatus.dim);
    b = build_apparatus_operator_N(apparatus.dim) +
        (apparatus.delta - 0.5) * ComplexMatrix::Identity(na, na);
  }
  return CompositeModel(build_chain_hamiltonian(chain), std::move(site0), std::move(b), apparatus.g);
}

}  // namespace zeno
