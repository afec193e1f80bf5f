#include "zeno/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "zeno/errors.hpp"

namespace zeno {

char segment_code(Segment s) { return s == Segment::Measurement ? 'M' : 'F'; }

double TimeSeries::value_at(double t) const {
  auto it = std::lower_bound(samples.begin(), samples.end(), t,
                             [](const Sample& s, double v) { return s.t < v; });
  if (it == samples.end() || it->t != t) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "TimeSeries: no sample at t = " << t;
    throw IndexError(msg.str());
  }
  return it->rho00;
}

void MeasurementSchedule::validate() const {
  auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!finite_nonneg(t_m)) throw InvalidParams("schedule: t_m must be finite and >= 0");
  if (!finite_nonneg(t_f)) throw InvalidParams("schedule: t_f must be finite and >= 0");
  if (!finite_nonneg(t_offset)) throw InvalidParams("schedule: t_offset must be finite and >= 0");
  if (!finite_nonneg(total_time)) throw InvalidParams("schedule: total_time must be finite and >= 0");
  if (!(sample_dt > 0.0) || !std::isfinite(sample_dt)) {
    throw InvalidParams("schedule: sample_dt must be positive");
  }
  for (double t : extra_times) {
    if (!(t >= 0.0 && t <= total_time)) {
      throw InvalidParams("schedule: extra sample times must lie in [0, total_time]");
    }
  }
}

Propagator::Propagator(const ComplexMatrix& h) : eig_(hermitian_eig(h)) {}

ComplexMatrix apparatus_reset_isometry(const ComplexMatrix& composite_unitary,
                                       std::size_t apparatus_dim) {
  const auto na = static_cast<Eigen::Index>(apparatus_dim);
  if (na == 0 || composite_unitary.cols() % na != 0) {
    throw DimensionError("apparatus_reset_isometry: dimension is not a multiple of N");
  }
  const Eigen::Index ls = composite_unitary.cols() / na;
  ComplexMatrix k(composite_unitary.rows(), ls);
  for (Eigen::Index n = 0; n < ls; ++n) k.col(n) = composite_unitary.col(n * na);
  return k;
}

DensityMatrix premeasurement_channel(const DensityMatrix& rho_s, const CompositeModel& model,
                                     double duration) {
  if (rho_s.dim() != model.system_dim()) {
    throw DimensionError("premeasurement_channel: state dimension differs from the chain");
  }
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw InvalidParams("premeasurement_channel: duration must be finite and >= 0");
  }
  const ComplexMatrix u = unitary_from_hamiltonian(model.total_hamiltonian(), duration);
  return reduce_after_premeasurement(apparatus_reset_isometry(u, model.apparatus_dim()), rho_s,
                                     model.apparatus_dim());
}

DensityMatrix premeasurement_channel(const DensityMatrix& rho_s, const CompositeModel& model) {
  return premeasurement_channel(rho_s, model, model.measurement_time());
}

DensityMatrix free_channel(const DensityMatrix& rho_s, double t, const ChainParams& chain) {
  if (rho_s.dim() != chain.sites) {
    throw DimensionError("free_channel: state dimension differs from the chain");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidParams("free_channel: t must be >= 0");
  if (t == 0.0) return rho_s;
  return conjugate(unitary_from_hamiltonian(build_chain_hamiltonian(chain), t), rho_s);
}

double occupation(const DensityMatrix& rho_s, std::size_t site) {
  if (site >= rho_s.dim()) {
    std::ostringstream msg;
    msg << "occupation: site " << site << " outside chain of " << rho_s.dim() << " sites";
    throw IndexError(msg.str());
  }
  return rho_s(site, site).real();
}

// ---------------------------------------------------------------------------

ScheduleRunner::ScheduleRunner(CompositeModel model, MeasurementSchedule schedule)
    : model_(std::move(model)),
      schedule_(std::move(schedule)),
      free_(model_.free_hamiltonian()),
      composite_(model_.total_hamiltonian()) {
  schedule_.validate();
  if (schedule_.measures() && !(model_.g() > 0.0)) {
    throw InvalidParams("schedule: measurements need a positive coupling g");
  }
  u_free_ = free_.at(schedule_.t_f);
  u_measure_ = composite_.at(schedule_.t_m);
  k_measure_ = apparatus_reset_isometry(u_measure_, model_.apparatus_dim());
}

std::vector<ScheduleRunner::Span> ScheduleRunner::segments() const {
  const double total = schedule_.total_time;
  std::vector<Span> out;
  if (!schedule_.measures()) {
    out.push_back({0.0, total, Segment::Free, false});
    return out;
  }
  const double offset = schedule_.t_offset;
  if (offset > 0.0) {
    out.push_back({0.0, std::min(offset, total), Segment::Free, false});
    if (offset >= total) return out;
  }
  const double period = schedule_.period();
  for (std::size_t n = 0;; ++n) {
    const double start = offset + static_cast<double>(n) * period;
    if (start >= total && !out.empty()) break;
    const double m_end = start + schedule_.t_m;
    out.push_back({start, std::min(m_end, total), Segment::Measurement, m_end <= total});
    if (m_end >= total) break;
    if (schedule_.t_f > 0.0) {
      const double next = offset + static_cast<double>(n + 1) * period;
      out.push_back({m_end, std::min(next, total), Segment::Free, next <= total});
    }
  }
  return out;
}

std::vector<double> ScheduleRunner::sample_times() const {
  // (time, priority): forced evaluation times win over segment boundaries,
  // which win over grid points, when two candidates coincide.
  std::vector<std::pair<double, int>> cand;
  const double total = schedule_.total_time;
  const double dt = schedule_.sample_dt;
  const auto steps = static_cast<std::size_t>(std::floor(total / dt + 1e-9));
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (t <= total) cand.emplace_back(t, 0);
  }
  for (const Span& s : segments()) cand.emplace_back(s.end, 1);
  cand.emplace_back(total, 1);
  for (double t : schedule_.extra_times) cand.emplace_back(t, 2);

  std::sort(cand.begin(), cand.end());
  std::vector<std::pair<double, int>> merged;
  for (const auto& c : cand) {
    if (!merged.empty()) {
      auto& last = merged.back();
      if (c.first - last.first <= 1e-12 * std::max(1.0, std::abs(c.first))) {
        if (c.second > last.second) last = c;
        continue;
      }
    }
    merged.push_back(c);
  }
  std::vector<double> out;
  out.reserve(merged.size());
  for (const auto& m : merged) out.push_back(m.first);
  return out;
}

DensityMatrix ScheduleRunner::advance_full(const DensityMatrix& rho, Segment kind) const {
  if (kind == Segment::Measurement) {
    return reduce_after_premeasurement(k_measure_, rho, model_.apparatus_dim());
  }
  return conjugate(u_free_, rho);
}

DensityMatrix ScheduleRunner::advance_partial(const DensityMatrix& rho, Segment kind,
                                              double dt) const {
  if (dt <= 0.0) return rho;
  if (kind == Segment::Measurement) {
    return reduce_after_premeasurement(apparatus_reset_isometry(composite_.at(dt), model_.apparatus_dim()),
                                       rho, model_.apparatus_dim());
  }
  return conjugate(free_.at(dt), rho);
}

template <typename Visitor>
void ScheduleRunner::walk(const DensityMatrix& rho0, std::span<const double> sorted_times,
                          Visitor&& visit) const {
  if (rho0.dim() != model_.system_dim()) {
    throw DimensionError("schedule: initial state dimension differs from the chain");
  }
  DensityMatrix state = rho0;
  std::size_t next = 0;
  const std::vector<Span> spans = segments();
  for (const Span& span : spans) {
    std::optional<DensityMatrix> end_state;
    auto end_of_span = [&]() -> const DensityMatrix& {
      if (!end_state) {
        end_state = span.full ? advance_full(state, span.kind)
                              : advance_partial(state, span.kind, span.end - span.start);
      }
      return *end_state;
    };
    while (next < sorted_times.size() && sorted_times[next] <= span.end) {
      const double t = sorted_times[next];
      if (t == span.end) {
        visit(next, span.kind, end_of_span());
      } else {
        visit(next, span.kind, advance_partial(state, span.kind, t - span.start));
      }
      ++next;
    }
    if (next >= sorted_times.size()) return;
    state = end_of_span();
  }
}

TimeSeries ScheduleRunner::run(const DensityMatrix& rho0) const {
  const std::vector<double> times = sample_times();
  TimeSeries series;
  series.samples.resize(times.size());
  walk(rho0, times, [&](std::size_t i, Segment kind, const DensityMatrix& rho) {
    series.samples[i] = {times[i], occupation(rho, 0), kind};
  });
  return series;
}

std::vector<double> ScheduleRunner::occupations_at(const DensityMatrix& rho0,
                                                   std::span<const double> times) const {
  std::vector<std::size_t> order(times.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return times[a] < times[b]; });
  std::vector<double> sorted(times.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted[i] = times[order[i]];
    if (!(sorted[i] >= 0.0 && sorted[i] <= schedule_.total_time)) {
      throw InvalidParams("occupations_at: time outside [0, total_time]");
    }
  }
  std::vector<double> out(times.size());
  walk(rho0, sorted, [&](std::size_t i, Segment, const DensityMatrix& rho) {
    out[order[i]] = occupation(rho, 0);
  });
  return out;
}

std::vector<ChannelState> ScheduleRunner::boundary_states(const DensityMatrix& rho0) const {
  std::vector<double> ends{0.0};
  for (const Span& s : segments()) ends.push_back(s.end);
  std::vector<ChannelState> out;
  std::size_t measured = 0;
  walk(rho0, ends, [&](std::size_t i, Segment kind, const DensityMatrix& rho) {
    if (i > 0 && kind == Segment::Measurement) ++measured;
    out.push_back({rho, ends[i], measured});
  });
  return out;
}

TimeSeries run_schedule(const DensityMatrix& rho0, const MeasurementSchedule& schedule,
                        const CompositeModel& model) {
  return ScheduleRunner(model, schedule).run(rho0);
}

}  // namespace zeno
