#include <gtest/gtest.h>

#include <numbers>

#include "zeno/config.hpp"
#include "zeno/errors.hpp"

using namespace zeno;
using std::numbers::pi;

TEST(Config, SurvivalFromFlags) {
  const RunConfig cfg =
      resolve_config({}, {{"command", "survival"}, {"g", "3.14159"}, {"delta", "0"}, {"sites", "2"}});
  EXPECT_EQ(cfg.command, Command::Survival);
  EXPECT_EQ(cfg.chain.sites, 2u);
  EXPECT_EQ(cfg.apparatus.g, 3.14159);
  EXPECT_NEAR(cfg.schedule.total_time, 1.0, 1e-5);
  EXPECT_EQ(cfg.schedule.t_m, cfg.schedule.total_time);
}

TEST(Config, DurationConstraint) {
  try {
    resolve_config({}, {{"t_m", "2"}, {"t_d", "1"}});
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("t_d must be ≥ t_m"), std::string::npos) << e.what();
  }
}

TEST(Config, Fig7Preset) {
  const RunConfig cfg = resolve_config({}, {{"preset", "fig7"}});
  EXPECT_EQ(cfg.command, Command::MapTmTf);
  EXPECT_EQ(cfg.apparatus.delta, 1.5);
  EXPECT_EQ(cfg.chain.epsilon, 0.0);
  EXPECT_EQ(cfg.chain.sites, 15u);
  EXPECT_EQ(cfg.eval_t, 5.0);
  ASSERT_TRUE(cfg.axis1 && cfg.axis2);
  EXPECT_EQ(cfg.axis1->points, 100u);
}

TEST(Config, AllPresetsResolve) {
  for (const char* name : {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9"}) {
    EXPECT_NO_THROW(resolve_config({}, {{"preset", name}})) << name;
  }
  EXPECT_THROW(resolve_config({}, {{"preset", "fig1"}}), ConfigError);
}

TEST(Config, Errors) {
  EXPECT_THROW(resolve_config({}, {{"bogus", "1"}}), ConfigError);
  EXPECT_THROW(resolve_config({}, {}), ConfigError);
  EXPECT_THROW(resolve_config({}, {{"command", "nope"}}), ConfigError);
  EXPECT_THROW(resolve_config({}, {{"command", "survival"}}), ConfigError);
  EXPECT_THROW(resolve_config({}, {{"command", "survival"}, {"g", "abc"}}), ConfigError);
  EXPECT_THROW(resolve_config({}, {{"command", "survival"}, {"g", "1"}, {"t_f", "1"}}), ConfigError);
  EXPECT_THROW(resolve_config({}, {{"command", "evolve"}, {"g", "1"}}), ConfigError);
  EXPECT_THROW(resolve_config({}, {{"command", "evolve"}, {"g", "1"}, {"t_m", "2"}, {"t_f", "1"}}), ConfigError);
  EXPECT_THROW(resolve_config({}, {{"command", "trace-distance"}, {"c0_re", "1"}, {"c1_re", "1"}}), ConfigError);
  EXPECT_THROW(resolve_config({}, {{"command", "map-tm-tf"}, {"points", "1"}}), ConfigError);
  EXPECT_THROW(resolve_config({}, {{"command", "map-tm-tf"}, {"tm_min", "2"}, {"tm_max", "1"}}), ConfigError);
  EXPECT_THROW(resolve_config({}, {{"command", "repfintime"}, {"tm_max", "2"}}), ConfigError);
  EXPECT_THROW(resolve_config({}, {{"command", "evolve"}, {"g", "1"}, {"t_f", "1"}, {"sample_dt", "0"}}),
               ConfigError);
}

TEST(Config, EvolveDerivedTimes) {
  RunConfig cfg = resolve_config({}, {{"command", "evolve"}, {"g", "100"}, {"t_f", "0.9"}});
  EXPECT_EQ(cfg.schedule.t_m, pi / 100.0);
  EXPECT_EQ(cfg.schedule.t_f, 0.9);
  EXPECT_EQ(cfg.chain.sites, 15u);

  cfg = resolve_config({}, {{"command", "evolve"}, {"t_m", "0.5"}, {"t_d", "1.5"}});
  EXPECT_EQ(cfg.apparatus.g, pi / 0.5);
  EXPECT_EQ(cfg.schedule.t_f, 1.0);

  cfg = resolve_config({}, {{"command", "evolve"}, {"t_m", "0"}});
  EXPECT_FALSE(cfg.schedule.measures());
}

TEST(Config, LayeringPresetFileFlags) {
  const KeyValues file = {{"preset", "fig5"}, {"t_f", "0.5"}, {"sites", "9"}};
  const RunConfig cfg = resolve_config(file, {{"sites", "7"}});
  EXPECT_EQ(cfg.schedule.t_f, 0.5);
  EXPECT_EQ(cfg.chain.sites, 7u);
  EXPECT_EQ(cfg.apparatus.g, 100.0);
}

TEST(Config, ParseText) {
  const KeyValues kv = parse_config_text("# comment\ncommand = evolve\n\n  g=100 \nt_f = 0.9\n");
  EXPECT_EQ(kv.at("command"), "evolve");
  EXPECT_EQ(kv.at("g"), "100");
  EXPECT_EQ(kv.size(), 3u);
  EXPECT_THROW(parse_config_text("g 100\n"), ConfigError);
  EXPECT_THROW(parse_config_text("g = 1\ng = 2\n"), ConfigError);
  EXPECT_THROW(parse_config_text("colour = red\n"), ConfigError);
}

TEST(Config, ParseEmittedHeader) {
  const KeyValues kv = parse_config_text(
      "# zeno 1.0.0\n# units: x\n# config:\n#   command = evolve\n#   g = 100\n# columns: t,value\n0,1\n");
  EXPECT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv.at("g"), "100");
}

TEST(Config, ResolvedEchoIsCanonical) {
  const RunConfig cfg = resolve_config({}, {{"command", "evolve"}, {"g", "1e2"}, {"t_f", "0.90"}, {"threads", "4"}});
  EXPECT_EQ(cfg.resolved.at("g"), "100");
  EXPECT_EQ(cfg.resolved.at("t_f"), "0.9");
  EXPECT_FALSE(cfg.resolved.contains("threads"));
  EXPECT_FALSE(cfg.resolved.contains("t_m"));
  const RunConfig again = resolve_config(cfg.resolved, {});
  EXPECT_EQ(again.resolved, cfg.resolved);
  EXPECT_EQ(format_config_number(pi), "3.141592653589793");
}
