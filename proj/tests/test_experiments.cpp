#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "oracles.hpp"
#include "zeno/errors.hpp"
#include "zeno/experiments.hpp"

using namespace zeno;
using std::numbers::pi;

TEST(Axis, ValuesAndValidation) {
  const Axis a{"t", 0.0, 1.0, 5};
  const auto v = a.values();
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v.front(), 0.0);
  EXPECT_EQ(v.back(), 1.0);
  EXPECT_DOUBLE_EQ(v[2], 0.5);
  EXPECT_THROW((Axis{"x", 0.0, 1.0, 5}.validate()), InvalidParams);
  EXPECT_THROW((Axis{"t", 0.0, 1.0, 1}.validate()), InvalidParams);
  EXPECT_THROW((Axis{"t", 1.0, 1.0, 3}.validate()), InvalidParams);
}

TEST(TraceDistanceCurve, ProjectiveLimitAndCompanion) {
  const Curve c = curve_trace_distance(0.0, {1.0, 0.0}, Axis{"t_m", 0.0, 0.05, 6});
  ASSERT_EQ(c.x.size(), 6u);
  ASSERT_EQ(c.linear_approx.size(), 6u);
  EXPECT_EQ(c.value[0], 0.0);
  EXPECT_EQ(c.linear_approx[0], 0.0);
  // Linear law: (2 / g) T1 = 2 t_m / pi for T1 = 1.
  EXPECT_NEAR(c.linear_approx[5], 2.0 * 0.05 / pi, 1e-15);
  for (std::size_t i = 1; i < 6; ++i) {
    EXPECT_NEAR(c.value[i] / c.linear_approx[i], 1.0, 0.05);
    EXPECT_LT(c.value[i - 1], c.value[i]);
  }
}

TEST(T1Curve, PeakAtZero) {
  const Axis axis{"delta", -3.0, 3.0, 201};
  const Curve c = curve_t1_vs_delta({1.0, 0.0}, axis);
  const auto it = std::max_element(c.value.begin(), c.value.end());
  const double argmax = c.x[static_cast<std::size_t>(it - c.value.begin())];
  EXPECT_NEAR(argmax, 0.0, axis.spacing());
  EXPECT_NEAR(*it, 1.0, 1e-12);
  EXPECT_TRUE(c.linear_approx.empty());
}

TEST(SurvivalDuringMeasurement, OrderingAndShortTime) {
  const auto curves = curve_survival_during_measurement(pi, {0.0, 1.0, 2.0}, Axis{"t", 0.0, 1.0, 101});
  ASSERT_EQ(curves.size(), 5u);
  EXPECT_LT(curves[0].curve.value.back(), curves[1].curve.value.back());
  EXPECT_LT(curves[1].curve.value.back(), curves[2].curve.value.back());
  for (const auto& lc : curves) {
    // Common 1 - t^2 start.
    EXPECT_NEAR(lc.curve.value[1], 1.0 - 1e-4, 1e-6) << lc.label;
  }
  EXPECT_NEAR(curves[3].curve.value[50], std::pow(std::cos(0.5), 2), 1e-13);
}

TEST(SurvivalUnderCoupling, MatchesClosedFormForTwoSites) {
  const std::vector<double> times = {0.0, 0.3, 0.9};
  const auto v = survival_under_coupling(ChainParams{2, 0.0, 1.0}, ApparatusParams{pi, 0.75, 2}, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    EXPECT_NEAR(v[i], two_site::survival_exact(times[i], pi, 0.75), 1e-12);
  }
}

TEST(Maps, ZenoPlateauAtSmallestTf) {
  const HeatmapResult h = map_t_tf(ChainParams{15, 0.0, 1.0}, 100.0, 0.0, Axis{"t", 0.0, 5.0, 11},
                                   Axis{"t_f", 0.0, 5.0, 3});
  ASSERT_EQ(h.rows(), 11u);
  ASSERT_EQ(h.cols(), 3u);
  for (std::size_t i = 1; i < h.rows(); ++i) {
    EXPECT_LT(h.value(i, 0), h.value(i - 1, 0));
    EXPECT_GT(h.value(i, 0), 0.75) << i;
  }
  EXPECT_LT(h.value(10, 2), 0.2);
}

TEST(Maps, TmTfMasksAndLimits) {
  const ChainParams chain{15, 0.0, 1.0};
  const HeatmapResult h = map_tm_tf(chain, 1.5, Axis{"t_m", 0.0, 0.1, 3}, Axis{"t_f", 0.0, 0.1, 3}, 5.0);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(h.masked(0, j));
  EXPECT_FALSE(h.masked(1, 1));
  EXPECT_GT(h.value(1, 0), 0.9);

  // Weak coupling: the system dynamics dominate and the value is small.
  const double weak = site0_population_at(chain, 1.5, 5.0, 0.0, 5.0);
  EXPECT_LT(weak, 0.1);
}

TEST(Maps, TmTdIsReparameterizedTmTf) {
  const ChainParams chain{6, 0.0, 1.0};
  const Axis tm{"t_m", 0.0, 1.0, 5};
  const Axis td{"t_d", 0.0, 2.0, 9};
  const HeatmapResult by_td = map_tm_td(chain, 1.5, tm, td, 3.0);
  const auto tms = tm.values();
  const auto tds = td.values();
  for (std::size_t i = 0; i < tms.size(); ++i) {
    for (std::size_t j = 0; j < tds.size(); ++j) {
      if (tms[i] <= 0.0 || tds[j] < tms[i]) {
        EXPECT_TRUE(by_td.masked(i, j));
        continue;
      }
      ASSERT_FALSE(by_td.masked(i, j));
      EXPECT_EQ(by_td.value(i, j), site0_population_at(chain, 1.5, tms[i], tds[j] - tms[i], 3.0));
    }
  }
}

TEST(Maps, ThreadCountDoesNotChangeResults) {
  const ChainParams chain{8, 0.0, 1.0};
  const Axis tm{"t_m", 0.0, 2.0, 7};
  const Axis tf{"t_f", 0.0, 2.0, 5};
  const HeatmapResult a = map_tm_tf(chain, 1.5, tm, tf, 4.0, SweepOptions{1, false});
  const HeatmapResult b = map_tm_tf(chain, 1.5, tm, tf, 4.0, SweepOptions{8, false});
  EXPECT_EQ(a.values.size(), b.values.size());
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (a.mask[k]) continue;
    EXPECT_EQ(std::memcmp(&a.values[k], &b.values[k], sizeof(double)), 0);
  }
  EXPECT_EQ(a.mask, b.mask);
}

TEST(Repfintime, IncreasingWithMeasurementTime) {
  const auto family = curve_repfintime(ChainParams{15, 0.0, 1.0}, 1.5, 1.5, {0.5, 0.75, 1.0});
  ASSERT_EQ(family.size(), 3u);
  double prev = 0.0;
  bool saw_m = false, saw_f = false;
  for (const auto& ls : family) {
    const double v = ls.series.value_at(5.0);
    EXPECT_GT(v, prev);
    prev = v;
    for (const Sample& s : ls.series.samples) {
      saw_m |= s.segment == Segment::Measurement;
      saw_f |= s.segment == Segment::Free;
    }
  }
  EXPECT_TRUE(saw_m && saw_f);
  EXPECT_THROW(curve_repfintime(ChainParams{15, 0.0, 1.0}, 1.5, 1.0, {1.2}), InvalidParams);
  EXPECT_THROW(curve_repfintime(ChainParams{15, 0.0, 1.0}, 1.5, 1.0, {0.0}), InvalidParams);
}
