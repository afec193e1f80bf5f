#pragma once

// Parameter sweeps behind each published curve and heatmap. All outputs are
// pure functions of their arguments; grid cells may be evaluated on several
// threads but results are stored by cell index, so the thread count never
// changes a single bit of the output.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zeno/dynamics.hpp"
#include "zeno/model.hpp"
#include "zeno/two_site.hpp"

namespace zeno {

/// Evenly spaced axis, both end points included.
struct Axis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  std::size_t points = 2;

  /// Name in {t, t_m, t_f, t_d, delta, epsilon, g}, points >= 2, min < max.
  void validate() const;
  std::vector<double> values() const;
  double spacing() const { return (max - min) / static_cast<double>(points - 1); }
};

struct SweepGrid {
  Axis axis1;
  std::optional<Axis> axis2;
  std::map<std::string, double> fixed;

  void validate() const;
};

struct HeatmapResult {
  SweepGrid grid;
  std::vector<double> values;   ///< row-major, axis1 outer
  std::vector<std::uint8_t> mask;  ///< 1 where the cell is undefined

  std::size_t rows() const { return grid.axis1.points; }
  std::size_t cols() const { return grid.axis2 ? grid.axis2->points : 1; }
  double value(std::size_t i, std::size_t j) const { return values[i * cols() + j]; }
  bool masked(std::size_t i, std::size_t j) const { return mask[i * cols() + j] != 0; }
};

/// x / value pairs with an optional companion column.
struct Curve {
  std::string x_name;
  std::vector<double> x;
  std::vector<double> value;
  std::vector<double> linear_approx;  ///< empty when the curve has no companion
};

struct LabeledCurve {
  std::string label;
  Curve curve;
};

struct LabeledSeries {
  std::string label;
  double parameter = 0.0;
  TimeSeries series;
};

struct SweepOptions {
  std::size_t threads = 1;
  bool progress = false;  ///< per-sweep counter on stderr
};

/// Trace distance between the two-site premeasurement result (g = pi / t_m)
/// and the projective result, with the first-order law (2 gamma / g) T1 as
/// companion column. t_m = 0 is the projective limit, T = 0.
Curve curve_trace_distance(double delta, const two_site::InitialQubit& q, const Axis& tm_range);

/// T1 over a delta grid.
Curve curve_t1_vs_delta(const two_site::InitialQubit& q, const Axis& delta_range);

/// Site-0 population while the coupling g stays on, starting from |0>|A_0>,
/// at the requested times. g = 0 gives the bare chain dynamics.
std::vector<double> survival_under_coupling(const ChainParams& chain,
                                            const ApparatusParams& apparatus,
                                            const std::vector<double>& times);

/// Two-site curves during one measurement for each delta + epsilon/g in
/// `combos` (realized with epsilon = 0), followed by the g = 0 references
/// for epsilon = 0 and epsilon = -pi.
std::vector<LabeledCurve> curve_survival_during_measurement(double g,
                                                            const std::vector<double>& combos,
                                                            const Axis& t_range);

/// rho00(eval_t) for repeated measurements of duration t_m (g = pi / t_m)
/// separated by t_f, starting with a measurement at t = 0.
double site0_population_at(const ChainParams& chain, double delta, double t_m, double t_f,
                           double eval_t);

/// rho00(t) over (t, t_f) at fixed g. axis1 = t, axis2 = t_f.
HeatmapResult map_t_tf(const ChainParams& chain, double g, double delta, const Axis& t_range,
                       const Axis& tf_range, const SweepOptions& opts = {});

/// rho00(eval_t) over (t_m, t_f); cells with t_m <= 0 are masked.
HeatmapResult map_tm_tf(const ChainParams& chain, double delta, const Axis& tm_range,
                        const Axis& tf_range, double eval_t, const SweepOptions& opts = {});

/// rho00(eval_t) over (t_m, t_d); cells with t_d < t_m (negative t_f) or
/// t_m <= 0 are masked. Defined cells equal map_tm_tf at t_f = t_d - t_m.
HeatmapResult map_tm_td(const ChainParams& chain, double delta, const Axis& tm_range,
                        const Axis& td_range, double eval_t, const SweepOptions& opts = {});

/// One labeled time series per t_m at fixed period t_d. Throws InvalidParams
/// when t_m > t_d or t_m <= 0.
std::vector<LabeledSeries> curve_repfintime(const ChainParams& chain, double delta, double t_d,
                                            const std::vector<double>& tm_list,
                                            double total_time = 5.0, double sample_dt = 0.01);

}  // namespace zeno
