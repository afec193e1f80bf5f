#pragma once

// Closed-form results for a two-site chain (epsilon = 0) coupled at site 0
// to a two-state apparatus started in |A_0>. These serve as exact oracles
// for the numerical propagation in dynamics.hpp.

#include "zeno/linalg.hpp"

namespace zeno::two_site {

struct Spectrum {
  double e0_plus = 0.0;
  double e0_minus = 0.0;
  double e1_plus = 0.0;
  double e1_minus = 0.0;
  double phi0 = 0.0;  ///< tan(phi0) = -4 gamma / (g (2 delta - 1)), phi0 in [0, pi)
  double phi1 = 0.0;  ///< tan(phi1) = -4 gamma / (g (2 delta + 1)), phi1 in [0, pi)
  double omega0 = 0.0;
  double omega1 = 0.0;
};

/// Eigenenergies of the coupled two-site Hamiltonian. The index n labels the
/// apparatus eigenstate |B_n> that block-diagonalizes H.
Spectrum spectrum(double g, double delta, double gamma = 1.0);

/// Site-0 population during a single measurement that starts from |0>|A_0>:
/// 1 + gamma^2 [(cos W0 t - 1)/W0^2 + (cos W1 t - 1)/W1^2].
double survival_exact(double t, double g, double delta, double gamma = 1.0);

/// Short-time expansion through t^4 of survival_exact.
double survival_taylor(double t, double g, double delta, double gamma = 1.0);

/// 1 - survival_exact and 1 - survival_taylor, evaluated without the
/// cancellation against 1. Differences of these resolve the O(t^6) remainder
/// down to t ~ 1e-3.
double survival_deficit_exact(double t, double g, double delta, double gamma = 1.0);
double survival_deficit_taylor(double t, double g, double delta, double gamma = 1.0);

/// Coefficient of t^4 in survival_taylor.
double taylor_quartic_coefficient(double g, double delta, double gamma = 1.0);

/// Chain state c0|0> + c1|1>, |c0|^2 + |c1|^2 = 1.
struct InitialQubit {
  Complex c0{1.0, 0.0};
  Complex c1{0.0, 0.0};

  /// Throws InvalidParams unless normalized within 1e-12.
  void validate() const;
  StateVector state() const;
};

/// Slope of the trace distance to the projective result in units of 2 gamma / g:
/// T = (2 gamma / g) T1 + O(1/g^2). Uses c0^2 and c1^2 (not |c|^2).
double t1_coefficient(const InitialQubit& q, double delta);

/// T1 for the composite state against |0><0| (x) |A_1><A_1|.
double t1_prime(double delta);

/// |Psi(t_m)> to first order in gamma / g for the start state |0>|A_0>,
/// in the system-major basis (|0,A0>, |0,A1>, |1,A0>, |1,A1>).
ComplexVector leading_order_state(double g, double delta, double gamma = 1.0);

}  // namespace zeno::two_site
