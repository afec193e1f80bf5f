#pragma once

// Repeated non-selective premeasurements of chain site 0.
//
// One cycle: rho_S (x) |A_0><A_0| -> U(t_m) . U(t_m)^dagger -> Tr_A ->
// free evolution for t_f -> next cycle with a fresh apparatus.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "zeno/linalg.hpp"
#include "zeno/model.hpp"

namespace zeno {

enum class Segment { Measurement, Free };

/// 'M' or 'F'.
char segment_code(Segment s);

struct Sample {
  double t = 0.0;
  double rho00 = 0.0;
  Segment segment = Segment::Free;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct TimeSeries {
  std::vector<Sample> samples;

  /// rho00 at a sample time that is present in the series; throws IndexError otherwise.
  double value_at(double t) const;

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;
};

struct MeasurementSchedule {
  double t_m = 0.0;         ///< duration of one measurement (0 = never measure)
  double t_f = 0.0;         ///< free evolution between measurements
  double total_time = 5.0;
  double sample_dt = 0.01;
  double t_offset = 0.0;    ///< free stretch before the first measurement
  std::vector<double> extra_times;  ///< forced sample times, e.g. an evaluation time

  double period() const { return t_m + t_f; }
  bool measures() const { return t_m > 0.0; }

  /// Throws InvalidParams for negative durations, non-positive sample_dt or
  /// negative total_time.
  void validate() const;
};

/// State threaded through a schedule, recorded at each segment boundary.
struct ChannelState {
  DensityMatrix rho_s;
  double t_now = 0.0;
  std::size_t cycle_index = 0;  ///< number of completed measurements
};

/// Spectrally exact exp(-i H t) for one fixed Hamiltonian.
class Propagator {
 public:
  explicit Propagator(const ComplexMatrix& h);

  ComplexMatrix at(double t) const { return unitary_from_eigensystem(eig_, t); }
  const EigenSystem& eigensystem() const { return eig_; }
  std::size_t dim() const { return static_cast<std::size_t>(eig_.values.size()); }

 private:
  EigenSystem eig_;
};

/// Columns n * N of a composite propagator: U (I (x) |A_0>).
ComplexMatrix apparatus_reset_isometry(const ComplexMatrix& composite_unitary,
                                       std::size_t apparatus_dim);

/// Tr_A[U(duration) (rho_s (x) |A_0><A_0|) U(duration)^dagger].
DensityMatrix premeasurement_channel(const DensityMatrix& rho_s, const CompositeModel& model,
                                     double duration);

/// Same, for the model's own measurement time 2 pi / (g N).
DensityMatrix premeasurement_channel(const DensityMatrix& rho_s, const CompositeModel& model);

/// U(t) rho_s U(t)^dagger with the bare chain Hamiltonian.
DensityMatrix free_channel(const DensityMatrix& rho_s, double t, const ChainParams& chain);

/// Real diagonal entry <site|rho_s|site>.
double occupation(const DensityMatrix& rho_s, std::size_t site);

/// Alternating measurement / free segments with eigen-decompositions and
/// full-segment propagators cached at construction. Const member functions
/// are safe to call concurrently.
class ScheduleRunner {
 public:
  ScheduleRunner(CompositeModel model, MeasurementSchedule schedule);

  const CompositeModel& model() const { return model_; }
  const MeasurementSchedule& schedule() const { return schedule_; }

  /// Propagator for a complete measurement segment, U(t_m).
  const ComplexMatrix& measurement_unitary() const { return u_measure_; }

  /// Site-0 population on the sampling grid, at every segment boundary and at
  /// every extra time.
  TimeSeries run(const DensityMatrix& rho0) const;

  /// Site-0 population at arbitrary times in [0, total_time] (any order).
  std::vector<double> occupations_at(const DensityMatrix& rho0, std::span<const double> times) const;

  /// States at t = 0 and at the end of every segment up to total_time.
  std::vector<ChannelState> boundary_states(const DensityMatrix& rho0) const;

 private:
  struct Span {
    double start;
    double end;
    Segment kind;
    bool full;  ///< spans the whole nominal duration (cached propagator applies)
  };

  std::vector<Span> segments() const;
  std::vector<double> sample_times() const;
  DensityMatrix advance_full(const DensityMatrix& rho, Segment kind) const;
  DensityMatrix advance_partial(const DensityMatrix& rho, Segment kind, double dt) const;

  template <typename Visitor>
  void walk(const DensityMatrix& rho0, std::span<const double> sorted_times, Visitor&& visit) const;

  CompositeModel model_;
  MeasurementSchedule schedule_;
  Propagator free_;
  Propagator composite_;
  ComplexMatrix u_free_;
  ComplexMatrix u_measure_;
  ComplexMatrix k_measure_;
};

/// Convenience wrapper around ScheduleRunner::run.
TimeSeries run_schedule(const DensityMatrix& rho0, const MeasurementSchedule& schedule,
                        const CompositeModel& model);

}  // namespace zeno
