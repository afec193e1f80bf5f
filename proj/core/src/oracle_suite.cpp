#include "zeno/oracle_suite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "zeno/dynamics.hpp"
#include "zeno/model.hpp"
#include "zeno/two_site.hpp"

namespace zeno {

namespace {

using std::numbers::pi;

constexpr std::array<double, 4> kCouplings = {0.5, pi, 10.0, 100.0};
constexpr std::array<double, 5> kShifts = {-1.0, 0.0, 0.25, 0.5, 1.5};

OracleCheck at_most(std::string name, double observed, double tol, std::string detail = {}) {
  return {std::move(name), observed, tol, observed <= tol, std::move(detail)};
}

CompositeModel two_site_model(double g, double delta) {
  return build_total_hamiltonian(ChainParams{2, 0.0, 1.0}, ApparatusParams{g, delta, 2});
}

std::array<double, 4> sorted_closed_form(double g, double delta) {
  const two_site::Spectrum s = two_site::spectrum(g, delta);
  std::array<double, 4> e{s.e0_minus, s.e0_plus, s.e1_minus, s.e1_plus};
  std::sort(e.begin(), e.end());
  return e;
}

OracleCheck spectrum_grid() {
  double worst = 0.0;
  for (double g : kCouplings) {
    for (double d : kShifts) {
      const EigenSystem eig = hermitian_eig(two_site_model(g, d).total_hamiltonian());
      const auto expected = sorted_closed_form(g, d);
      for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(eig.values(static_cast<Eigen::Index>(k)) - expected[k]));
      }
    }
  }
  return at_most("two-site spectrum vs closed form (20 parameter pairs)", worst, 1e-12);
}

OracleCheck spectrum_point() {
  const EigenSystem eig = hermitian_eig(two_site_model(4.0, 0.5).total_hamiltonian());
  const std::array<double, 4> expected = {-1.0, 2.0 - std::sqrt(5.0), 1.0, 2.0 + std::sqrt(5.0)};
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    worst = std::max(worst, std::abs(eig.values(static_cast<Eigen::Index>(k)) - expected[k]));
  }
  return at_most("two-site spectrum at g=4, delta=1/2 (E1 = 2 +- sqrt 5)", worst, 1e-12);
}

OracleCheck survival_grid(bool inject_fault) {
  double worst = 0.0;
  for (double g : kCouplings) {
    for (double d : kShifts) {
      const CompositeModel model = two_site_model(g, d);
      const Propagator prop(model.total_hamiltonian());
      const double tm = model.measurement_time();
      for (int k = 0; k < 50; ++k) {
        const double t = tm * k / 49.0;
        ComplexMatrix u = prop.at(t);
        if (inject_fault) u(0, 0) += 1e-6;
        // Start in |0>|A_0> (composite index 0): rho00 = sum_a |U[(0,a), 0]|^2.
        const double numeric = std::norm(u(0, 0)) + std::norm(u(1, 0));
        worst = std::max(worst, std::abs(numeric - two_site::survival_exact(t, g, d)));
      }
    }
  }
  return at_most("survival during measurement: propagation vs closed form", worst, 1e-10,
                 inject_fault ? "fault injected" : "");
}

OracleCheck taylor_order() {
  constexpr std::array<std::pair<double, double>, 3> params = {
      std::pair{pi, 0.0}, std::pair{pi, 1.0}, std::pair{10.0, 0.5}};
  double worst_ratio = std::numeric_limits<double>::infinity();
  for (auto [g, d] : params) {
    for (int k = 0; k <= 10; ++k) {
      const double t = std::pow(10.0, -2.0 + k / 10.0);
      auto err = [&](double tt) {
        return std::abs(two_site::survival_deficit_exact(tt, g, d) -
                        two_site::survival_deficit_taylor(tt, g, d));
      };
      worst_ratio = std::min(worst_ratio, err(t) / err(t / 2.0));
    }
  }
  OracleCheck c{"short-time expansion error ratio err(t)/err(t/2) (>= 50)", worst_ratio, 50.0,
                worst_ratio >= 50.0, ""};
  return c;
}

double premeasured_trace_distance(const two_site::InitialQubit& q, double g, double delta) {
  const CompositeModel model = two_site_model(g, delta);
  const DensityMatrix out = premeasurement_channel(DensityMatrix::pure(q.state()), model);
  RealVector proj(2);
  proj << std::norm(q.c0), std::norm(q.c1);
  return trace_distance(out, DensityMatrix::diagonal(proj));
}

OracleCheck projective_limit() {
  const double g = 1e4;
  double worst = 0.0;
  std::ostringstream detail;
  detail << std::setprecision(8);
  for (double d : {0.0, 0.25, 0.5, 1.0}) {
    const two_site::InitialQubit q{{1.0, 0.0}, {0.0, 0.0}};
    const double scaled = g * premeasured_trace_distance(q, g, d) / 2.0;
    const double t1 = two_site::t1_coefficient(q, d);
    const double rel = std::abs(scaled - t1) / t1;
    worst = std::max(worst, rel);
    detail << " delta=" << d << ": " << scaled << " vs " << t1 << ";";
  }
  return at_most("g T / (2 gamma) -> T1 at g = 1e4 (relative)", worst, 0.01, detail.str());
}

OracleCheck quadratic_approach() {
  const double s = 1.0 / std::numbers::sqrt2;
  const two_site::InitialQubit q{{s, 0.0}, {s, 0.0}};
  // Least-squares slope of log T against log(1/g) on g in [1e2, 1e4].
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const int n = 9;
  for (int k = 0; k < n; ++k) {
    const double g = std::pow(10.0, 2.0 + 2.0 * k / (n - 1));
    const double x = std::log(1.0 / g);
    const double y = std::log(premeasured_trace_distance(q, g, 0.0));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  std::ostringstream detail;
  detail << std::setprecision(8) << "slope=" << slope;
  return at_most("c0=c1=2^-1/2, delta=0: log-log slope of T vs 1/g is 2", std::abs(slope - 2.0),
                 0.05, detail.str());
}

OracleCheck perfect_measurement(bool inject_fault) {
  double worst = 0.0;
  const double g = 1.0;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto dim = static_cast<Eigen::Index>(n);
    RealVector levels(dim);
    for (Eigen::Index k = 0; k < dim; ++k) levels(k) = static_cast<double>(k);
    const CompositeModel model(ComplexMatrix::Zero(dim, dim), levels.cast<Complex>().asDiagonal(),
                               build_apparatus_operator_N(n), g);
    ComplexMatrix u = unitary_from_hamiltonian(model.total_hamiltonian(), model.measurement_time());
    if (inject_fault) u(0, 0) += 1e-6;
    for (Eigen::Index j = 0; j < dim; ++j) {
      // |s_j>|A_0> -> |s_j>|A_j>
      const Complex overlap = u(j * dim + j, j * dim);
      worst = std::max(worst, std::abs(1.0 - std::norm(overlap)));
    }
  }
  return at_most("ideal measurement |s_j>|A_0> -> |s_j>|A_j>, N = 2..8 (1 - overlap^2)", worst,
                 1e-12, inject_fault ? "fault injected" : "");
}

OracleCheck shift_equivalence() {
  double worst = 0.0;
  const ChainParams base{5, 0.7, 1.0};
  const double g = 3.0;
  const double delta = 0.3;
  for (double shift : {-2.0, -0.75, 0.5, 1.25, 2.0}) {
    const ChainParams moved{base.sites, base.epsilon + g * shift, base.gamma};
    const ApparatusParams a{g, delta, 2};
    const ApparatusParams b{g, delta - shift, 2};
    const double tm = measurement_time(g);
    const ComplexMatrix ua = unitary_from_hamiltonian(build_total_hamiltonian(base, a).total_hamiltonian(), tm);
    const ComplexMatrix ub = unitary_from_hamiltonian(build_total_hamiltonian(moved, b).total_hamiltonian(), tm);
    worst = std::max(worst, (ua - ub).cwiseAbs().maxCoeff());
  }
  return at_most("(epsilon, delta) ~ (epsilon + g D, delta - D) measurement propagators", worst, 1e-12);
}

}  // namespace

std::vector<OracleCheck> run_oracle_suite(const OracleOptions& opts) {
  return {spectrum_grid(),      spectrum_point(),   survival_grid(opts.inject_fault),
          taylor_order(),       projective_limit(), quadratic_approach(),
          perfect_measurement(opts.inject_fault), shift_equivalence()};
}

bool print_oracle_report(const std::vector<OracleCheck>& checks, std::ostream& out) {
  bool all = true;
  for (const OracleCheck& c : checks) {
    all = all && c.passed;
    out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  observed=" << std::setprecision(6)
        << std::scientific << c.observed << " tol=" << c.tolerance << std::defaultfloat;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
  out << (all ? "all oracle checks passed" : "oracle checks FAILED") << '\n';
  return all;
}

}  // namespace zeno
