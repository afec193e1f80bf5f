#pragma once

// Reference values computed without the library: power series for Bessel
// functions, characteristic polynomials by Faddeev-LeVerrier, brute-force
// basis changes.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

/// J_n(x) from its power series in long double. Good to ~1e-12 for |x| <= 20.
inline double bessel_j(int n, double x) {
  const long double h = static_cast<long double>(x) / 2.0L;
  long double term = 1.0L;
  for (int k = 1; k <= n; ++k) term *= h / static_cast<long double>(k);
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -h * h / (static_cast<long double>(k) * static_cast<long double>(k + n));
    sum += term;
    if (std::fabs(term) < 1e-30L && k > static_cast<int>(h)) break;
  }
  return static_cast<double>(sum);
}

/// Return probability to the end site of a semi-infinite chain with unit
/// hopping: |J_0(2t) + J_2(2t)|^2 = (J_1(2t) / t)^2.
inline double edge_return_probability(double t) {
  if (t == 0.0) return 1.0;
  const double a = bessel_j(0, 2.0 * t) + bessel_j(2, 2.0 * t);
  return a * a;
}

/// Return probability to a bulk site of an infinite chain: J_0(2t)^2.
inline double bulk_return_probability(double t) {
  const double a = bessel_j(0, 2.0 * t);
  return a * a;
}

/// Coefficients c[0..n] of det(x I - A) = sum c[k] x^k (c[n] = 1).
inline std::vector<double> characteristic_polynomial(const Eigen::MatrixXcd& a) {
  const auto n = a.rows();
  std::vector<std::complex<double>> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1.0;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * id;
    c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / static_cast<double>(k);
  }
  std::vector<double> out;
  for (const auto& v : c) out.push_back(v.real());
  return out;
}

inline double poly_eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

/// Real roots in [lo, hi] by scanning for sign changes and bisecting, then
/// polishing with Newton; double roots are caught as local minima of |p|.
inline std::vector<double> real_roots(const std::vector<double>& c, double lo, double hi,
                                      std::size_t scan = 20000) {
  std::vector<double> roots;
  const double step = (hi - lo) / static_cast<double>(scan);
  auto p = [&](double x) { return poly_eval(c, x); };
  for (std::size_t i = 0; i < scan; ++i) {
    double a = lo + step * static_cast<double>(i);
    double b = a + step;
    double fa = p(a), fb = p(b);
    if (fa == 0.0) {
      roots.push_back(a);
      continue;
    }
    if (fa * fb < 0.0) {
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = p(m);
        if (fa * fm <= 0.0) {
          b = m;
          fb = fm;
        } else {
          a = m;
          fa = fm;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Pointer-basis matrix of sum_k k |B_k><B_k| with |B_k> = sum_j e^{2 pi i jk/N} |A_j> / sqrt N,
/// summed entry by entry.
inline Eigen::MatrixXcd dft_apparatus_operator(std::size_t n) {
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const double nn = static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      std::complex<double> sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(k) *
                             (static_cast<double>(j) - static_cast<double>(l)) / nn;
        sum += static_cast<double>(k) * std::polar(1.0, phase);
      }
      b(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) = sum / nn;
    }
  }
  return b;
}

/// Random density matrix of dimension n: a mixture of `rank` random pure states.
inline Eigen::MatrixXcd random_density(std::size_t n, std::size_t rank, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto dn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd g(dn, static_cast<Eigen::Index>(rank));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = {normal(rng), normal(rng)};
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace oracle
