#include "zeno/two_site.hpp"

#include <cmath>
#include <numbers>

#include "zeno/errors.hpp"

namespace zeno::two_site {

namespace {

using std::numbers::pi;

// Below this distance from delta = +-1/2 the closed forms are 0/0 and are
// replaced by series in x = delta -+ 1/2.
constexpr double kSingularWindow = 1e-6;

void require_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidParams("gamma must be positive");
}

// (2 delta - sin(pi delta)) / (1 - 4 delta^2)
double ratio_sin(double delta) {
  const double xp = delta - 0.5;
  const double xm = delta + 0.5;
  if (std::abs(xp) < kSingularWindow) {
    return (2.0 + 0.5 * pi * pi * xp) / (-4.0 - 4.0 * xp);
  }
  if (std::abs(xm) < kSingularWindow) {
    return (2.0 - 0.5 * pi * pi * xm) / (4.0 - 4.0 * xm);
  }
  return (2.0 * delta - std::sin(pi * delta)) / (1.0 - 4.0 * delta * delta);
}

// cos(pi delta) / (1 - 4 delta^2)
double ratio_cos(double delta) {
  const double xp = delta - 0.5;
  const double xm = delta + 0.5;
  if (std::abs(xp) < kSingularWindow) return pi / (4.0 + 4.0 * xp);
  if (std::abs(xm) < kSingularWindow) return pi / (4.0 - 4.0 * xm);
  return std::cos(pi * delta) / (1.0 - 4.0 * delta * delta);
}

// (1 -+ sin(pi delta)) / (2 (2 delta -+ 1)^2), the two terms under the root of T1'.
double t1_prime_term(double delta, double sign) {
  const double x = delta - sign * 0.5;
  if (std::abs(x) < kSingularWindow) {
    // 1 - cos(pi x) over 8 x^2
    return pi * pi / 16.0 - std::pow(pi, 4) * x * x / 192.0;
  }
  const double d = 2.0 * delta - sign;
  return (1.0 - sign * std::sin(pi * delta)) / (2.0 * d * d);
}

// (1 - s i e^{-i pi delta}) / (2 delta - s), s = +-1
Complex phase_ratio(double delta, double sign) {
  const double x = delta - sign * 0.5;
  if (std::abs(x) < kSingularWindow) {
    return {pi * pi * x / 4.0, pi / 2.0};
  }
  const Complex e = std::polar(1.0, -pi * delta);
  return (1.0 - sign * Complex(0.0, 1.0) * e) / (2.0 * delta - sign);
}

double phase_angle(double gamma, double g, double shift) {
  double phi = std::atan2(-4.0 * gamma, g * shift);
  if (phi < 0.0) phi += pi;
  return phi;
}

}  // namespace

Spectrum spectrum(double g, double delta, double gamma) {
  require_gamma(gamma);
  if (!(g >= 0.0) || !std::isfinite(g)) throw InvalidParams("g must be finite and non-negative");
  Spectrum s;
  const double a0 = g * (2.0 * delta - 1.0) / 4.0;
  const double a1 = g * (2.0 * delta + 1.0) / 4.0;
  const double r0 = std::hypot(gamma, a0);
  const double r1 = std::hypot(gamma, a1);
  s.e0_plus = a0 + r0;
  s.e0_minus = a0 - r0;
  s.e1_plus = a1 + r1;
  s.e1_minus = a1 - r1;
  s.omega0 = 2.0 * r0;
  s.omega1 = 2.0 * r1;
  s.phi0 = phase_angle(gamma, g, 2.0 * delta - 1.0);
  s.phi1 = phase_angle(gamma, g, 2.0 * delta + 1.0);
  return s;
}

double survival_deficit_exact(double t, double g, double delta, double gamma) {
  const Spectrum s = spectrum(g, delta, gamma);
  // 1 - cos(W t) = 2 sin^2(W t / 2)
  auto term = [t](double w) {
    const double h = std::sin(0.5 * w * t);
    return 2.0 * h * h / (w * w);
  };
  return gamma * gamma * (term(s.omega0) + term(s.omega1));
}

double survival_exact(double t, double g, double delta, double gamma) {
  return 1.0 - survival_deficit_exact(t, g, delta, gamma);
}

double taylor_quartic_coefficient(double g, double delta, double gamma) {
  require_gamma(gamma);
  const double g4 = gamma * gamma * gamma * gamma;
  return (1.0 + g * g * (4.0 * delta * delta + 1.0) / (16.0 * gamma * gamma)) * g4 / 3.0;
}

double survival_deficit_taylor(double t, double g, double delta, double gamma) {
  const double t2 = t * t;
  return gamma * gamma * t2 - taylor_quartic_coefficient(g, delta, gamma) * t2 * t2;
}

double survival_taylor(double t, double g, double delta, double gamma) {
  return 1.0 - survival_deficit_taylor(t, g, delta, gamma);
}

void InitialQubit::validate() const {
  const double norm = std::norm(c0) + std::norm(c1);
  if (!(std::abs(norm - 1.0) <= kAlgebraicTol)) {
    throw InvalidParams("initial qubit must satisfy |c0|^2 + |c1|^2 = 1");
  }
}

StateVector InitialQubit::state() const {
  validate();
  ComplexVector v(2);
  v << c0, c1;
  return StateVector(std::move(v));
}

double t1_coefficient(const InitialQubit& q, double delta) {
  q.validate();
  const Complex sum = q.c0 * q.c0 + q.c1 * q.c1;
  const Complex diff = q.c0 * q.c0 - q.c1 * q.c1;
  return std::abs(ratio_sin(delta) * sum - Complex(0.0, 1.0) * ratio_cos(delta) * diff);
}

double t1_prime(double delta) {
  return std::sqrt(t1_prime_term(delta, +1.0) + t1_prime_term(delta, -1.0));
}

ComplexVector leading_order_state(double g, double delta, double gamma) {
  require_gamma(gamma);
  if (!(g > 0.0)) throw InvalidParams("g must be positive");
  const Complex i(0.0, 1.0);
  const Complex minus = phase_ratio(delta, +1.0);  // (1 - i e^{-i pi delta}) / (2 delta - 1)
  const Complex plus = phase_ratio(delta, -1.0);   // (1 + i e^{-i pi delta}) / (2 delta + 1)
  const double scale = gamma / g;
  ComplexVector psi = ComplexVector::Zero(4);
  psi(1) = i * std::polar(1.0, -pi * delta);
  psi(2) = scale * (minus + plus);
  psi(3) = scale * (minus - plus);
  return psi;
}

}  // namespace zeno::two_site
