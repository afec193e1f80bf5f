#include "zeno/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string_view>

#include "parallel.hpp"
#include "zeno/errors.hpp"

namespace zeno {

namespace {

using std::numbers::pi;

constexpr std::array<std::string_view, 7> kAxisNames = {"t", "t_m", "t_f", "t_d",
                                                        "delta", "epsilon", "g"};

ChainParams two_site_chain(double epsilon = 0.0) { return ChainParams{2, epsilon, 1.0}; }

const double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

void Axis::validate() const {
  if (std::find(kAxisNames.begin(), kAxisNames.end(), name) == kAxisNames.end()) {
    throw InvalidParams("axis name '" + name + "' is not one of t, t_m, t_f, t_d, delta, epsilon, g");
  }
  if (points < 2) throw InvalidParams("axis '" + name + "' needs at least 2 points");
  if (!(min < max) || !std::isfinite(min) || !std::isfinite(max)) {
    throw InvalidParams("axis '" + name + "' needs finite min < max");
  }
}

std::vector<double> Axis::values() const {
  validate();
  std::vector<double> v(points);
  const double step = spacing();
  for (std::size_t i = 0; i < points; ++i) v[i] = min + static_cast<double>(i) * step;
  v.back() = max;
  return v;
}

void SweepGrid::validate() const {
  axis1.validate();
  if (axis2) {
    axis2->validate();
    if (axis2->name == axis1.name) throw InvalidParams("sweep axes must differ");
  }
}

Curve curve_trace_distance(double delta, const two_site::InitialQubit& q, const Axis& tm_range) {
  q.validate();
  if (tm_range.min < 0.0) throw InvalidParams("t_m range must be non-negative");
  const DensityMatrix rho0 = DensityMatrix::pure(q.state());
  RealVector proj(2);
  proj << std::norm(q.c0), std::norm(q.c1);
  const DensityMatrix rho_proj = DensityMatrix::diagonal(proj);
  const double t1 = two_site::t1_coefficient(q, delta);
  const double gamma = 1.0;

  Curve c;
  c.x_name = "t_m";
  c.x = tm_range.values();
  for (double tm : c.x) {
    if (tm <= 0.0) {
      c.value.push_back(0.0);
      c.linear_approx.push_back(0.0);
      continue;
    }
    const double g = pi / tm;
    const CompositeModel model = build_total_hamiltonian(two_site_chain(), {g, delta, 2});
    const DensityMatrix out = premeasurement_channel(rho0, model, tm);
    c.value.push_back(trace_distance(out, rho_proj));
    c.linear_approx.push_back(2.0 * gamma / g * t1);
  }
  return c;
}

Curve curve_t1_vs_delta(const two_site::InitialQubit& q, const Axis& delta_range) {
  Curve c;
  c.x_name = "delta";
  c.x = delta_range.values();
  for (double d : c.x) c.value.push_back(two_site::t1_coefficient(q, d));
  return c;
}

std::vector<double> survival_under_coupling(const ChainParams& chain,
                                            const ApparatusParams& apparatus,
                                            const std::vector<double>& times) {
  const CompositeModel model = build_total_hamiltonian(chain, apparatus);
  const Propagator prop(model.total_hamiltonian());
  const DensityMatrix rho0 = DensityMatrix::basis(chain.sites, 0);
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    const ComplexMatrix k = apparatus_reset_isometry(prop.at(t), model.apparatus_dim());
    out.push_back(occupation(reduce_after_premeasurement(k, rho0, model.apparatus_dim()), 0));
  }
  return out;
}

std::vector<LabeledCurve> curve_survival_during_measurement(double g,
                                                            const std::vector<double>& combos,
                                                            const Axis& t_range) {
  if (!(g > 0.0)) throw InvalidParams("coupling g must be positive");
  const std::vector<double> times = t_range.values();
  std::vector<LabeledCurve> out;
  auto make = [&](std::string label, const ChainParams& chain, double coupling, double delta) {
    LabeledCurve lc{std::move(label), {"t", times, {}, {}}};
    lc.curve.value = survival_under_coupling(chain, {coupling, delta, 2}, times);
    out.push_back(std::move(lc));
  };
  for (double combo : combos) {
    std::ostringstream label;
    label.precision(17);
    label << "delta+eps/g=" << combo;
    make(label.str(), two_site_chain(), g, combo);
  }
  make("free eps=0", two_site_chain(0.0), 0.0, 0.0);
  make("free eps=-pi", two_site_chain(-pi), 0.0, 0.0);
  return out;
}

double site0_population_at(const ChainParams& chain, double delta, double t_m, double t_f,
                           double eval_t) {
  if (!(t_m > 0.0)) throw InvalidParams("t_m must be positive");
  MeasurementSchedule schedule;
  schedule.t_m = t_m;
  schedule.t_f = t_f;
  schedule.total_time = eval_t;
  const ScheduleRunner runner(build_total_hamiltonian(chain, {pi / t_m, delta, 2}), schedule);
  const std::array<double, 1> at{eval_t};
  return runner.occupations_at(DensityMatrix::basis(chain.sites, 0), at)[0];
}

HeatmapResult map_t_tf(const ChainParams& chain, double g, double delta, const Axis& t_range,
                       const Axis& tf_range, const SweepOptions& opts) {
  if (!(g > 0.0)) throw InvalidParams("coupling g must be positive");
  HeatmapResult h;
  h.grid = {t_range, tf_range, {{"epsilon", chain.epsilon}, {"g", g}, {"delta", delta}}};
  h.grid.validate();
  if (t_range.min < 0.0 || tf_range.min < 0.0) throw InvalidParams("t and t_f must be >= 0");
  const std::vector<double> ts = t_range.values();
  const std::vector<double> tfs = tf_range.values();
  h.values.assign(ts.size() * tfs.size(), kNaN);
  h.mask.assign(ts.size() * tfs.size(), 0);
  const CompositeModel model = build_total_hamiltonian(chain, {g, delta, 2});
  const DensityMatrix rho0 = DensityMatrix::basis(chain.sites, 0);

  detail::parallel_for(tfs.size(), opts.threads, opts.progress, "map-t-tf", [&](std::size_t j) {
    MeasurementSchedule schedule;
    schedule.t_m = model.measurement_time();
    schedule.t_f = tfs[j];
    schedule.total_time = t_range.max;
    const std::vector<double> column = ScheduleRunner(model, schedule).occupations_at(rho0, ts);
    for (std::size_t i = 0; i < ts.size(); ++i) h.values[i * tfs.size() + j] = column[i];
  });
  return h;
}

HeatmapResult map_tm_tf(const ChainParams& chain, double delta, const Axis& tm_range,
                        const Axis& tf_range, double eval_t, const SweepOptions& opts) {
  HeatmapResult h;
  h.grid = {tm_range, tf_range, {{"epsilon", chain.epsilon}, {"delta", delta}, {"t", eval_t}}};
  h.grid.validate();
  if (tm_range.min < 0.0 || tf_range.min < 0.0) throw InvalidParams("t_m and t_f must be >= 0");
  if (!(eval_t >= 0.0)) throw InvalidParams("evaluation time must be >= 0");
  const std::vector<double> tms = tm_range.values();
  const std::vector<double> tfs = tf_range.values();
  const std::size_t cols = tfs.size();
  h.values.assign(tms.size() * cols, kNaN);
  h.mask.assign(tms.size() * cols, 0);

  detail::parallel_for(h.values.size(), opts.threads, opts.progress, "map-tm-tf", [&](std::size_t c) {
    const double tm = tms[c / cols];
    if (tm <= 0.0) {
      h.mask[c] = 1;
      return;
    }
    h.values[c] = site0_population_at(chain, delta, tm, tfs[c % cols], eval_t);
  });
  return h;
}

HeatmapResult map_tm_td(const ChainParams& chain, double delta, const Axis& tm_range,
                        const Axis& td_range, double eval_t, const SweepOptions& opts) {
  HeatmapResult h;
  h.grid = {tm_range, td_range, {{"epsilon", chain.epsilon}, {"delta", delta}, {"t", eval_t}}};
  h.grid.validate();
  if (tm_range.min < 0.0) throw InvalidParams("t_m must be >= 0");
  if (!(eval_t >= 0.0)) throw InvalidParams("evaluation time must be >= 0");
  const std::vector<double> tms = tm_range.values();
  const std::vector<double> tds = td_range.values();
  const std::size_t cols = tds.size();
  h.values.assign(tms.size() * cols, kNaN);
  h.mask.assign(tms.size() * cols, 0);

  detail::parallel_for(h.values.size(), opts.threads, opts.progress, "map-tm-td", [&](std::size_t c) {
    const double tm = tms[c / cols];
    const double td = tds[c % cols];
    if (tm <= 0.0 || td < tm) {
      h.mask[c] = 1;
      return;
    }
    h.values[c] = site0_population_at(chain, delta, tm, td - tm, eval_t);
  });
  return h;
}

std::vector<LabeledSeries> curve_repfintime(const ChainParams& chain, double delta, double t_d,
                                            const std::vector<double>& tm_list, double total_time,
                                            double sample_dt) {
  std::vector<LabeledSeries> out;
  for (double tm : tm_list) {
    if (!(tm > 0.0)) throw InvalidParams("repfintime: t_m must be positive");
    if (tm > t_d) throw InvalidParams("repfintime: t_m must not exceed t_d");
    MeasurementSchedule schedule;
    schedule.t_m = tm;
    schedule.t_f = t_d - tm;
    schedule.total_time = total_time;
    schedule.sample_dt = sample_dt;
    const ScheduleRunner runner(build_total_hamiltonian(chain, {pi / tm, delta, 2}), schedule);
    std::ostringstream label;
    label.precision(17);
    label << "t_m=" << tm;
    out.push_back({label.str(), tm, runner.run(DensityMatrix::basis(chain.sites, 0))});
  }
  return out;
}

}  // namespace zeno
