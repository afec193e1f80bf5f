#pragma once

// Hamiltonians for a tight-binding chain whose site 0 is coupled to a
// finite-dimensional measurement apparatus.
//
// Natural units: hbar = 1, energies in units of the hopping gamma, times in
// units of hbar / gamma.

#include <cstddef>

#include "zeno/linalg.hpp"

namespace zeno {

struct ChainParams {
  std::size_t sites = 2;
  double epsilon = 0.0;  ///< on-site energy of site 0
  double gamma = 1.0;    ///< hopping amplitude

  /// Throws InvalidParams for sites == 0, gamma <= 0 or non-finite values.
  void validate() const;
};

struct ApparatusParams {
  double g = 1.0;      ///< coupling while a measurement is running
  double delta = 0.0;  ///< shift of the apparatus-operator spectrum
  std::size_t dim = 2;

  void validate() const;
};

/// Chain Hamiltonian: epsilon |0><0| - gamma sum (|n><n+1| + h.c.).
ComplexMatrix build_chain_hamiltonian(const ChainParams& p);

/// Two-state apparatus operator in the pointer basis, delta*I - sigma_x / 2.
/// Eigenvalues delta - 1/2 (on |B_0>) and delta + 1/2 (on |B_1>).
ComplexMatrix build_apparatus_operator_2(double delta);

/// sum_k k |B_k><B_k| in the pointer basis.
ComplexMatrix build_apparatus_operator_N(std::size_t n);

/// Change of basis whose column k holds |B_k> in the pointer basis,
/// F[j,k] = exp(2 pi i j k / N) / sqrt(N).
ComplexMatrix conjugate_basis(std::size_t n);

struct HadamardPair {
  StateVector b0;
  StateVector b1;
};

HadamardPair hadamard_pair();

/// The 2x2 Hadamard matrix (self-inverse).
ComplexMatrix hadamard_matrix();

/// 2 pi / (g N); pi / g for the two-state apparatus.
double measurement_time(double g, std::size_t apparatus_dim = 2);

/// System plus apparatus while the coupling is switched on:
/// H_total = H_free (x) I_A + g * (s (x) B).
class CompositeModel {
 public:
  /// Assemble from explicit parts. `observable` is the measured system
  /// operator s, `apparatus_operator` is B. Both must be Hermitian.
  CompositeModel(ComplexMatrix free_hamiltonian, ComplexMatrix observable,
                 ComplexMatrix apparatus_operator, double g);

  const ComplexMatrix& free_hamiltonian() const { return h_free_; }
  const ComplexMatrix& observable() const { return observable_; }
  const ComplexMatrix& apparatus_operator() const { return b_; }
  const ComplexMatrix& total_hamiltonian() const { return h_total_; }

  double g() const { return g_; }
  std::size_t system_dim() const { return static_cast<std::size_t>(h_free_.rows()); }
  std::size_t apparatus_dim() const { return static_cast<std::size_t>(b_.rows()); }
  std::size_t dim() const { return system_dim() * apparatus_dim(); }

  /// 2 pi / (g N). Throws InvalidParams when g <= 0.
  double measurement_time() const;

 private:
  ComplexMatrix h_free_;
  ComplexMatrix observable_;
  ComplexMatrix b_;
  ComplexMatrix h_total_;
  double g_;
};

/// Chain coupled at site 0 to the apparatus. For dim == 2 the apparatus
/// operator is build_apparatus_operator_2(delta); for dim > 2 it is
/// build_apparatus_operator_N(dim) + (delta - 1/2) I, which agrees with the
/// two-state operator at dim == 2.
CompositeModel build_total_hamiltonian(const ChainParams& chain, const ApparatusParams& apparatus);

}  // namespace zeno
