#include "zeno/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

using std::numbers::pi;

constexpr std::array<std::pair<Command, std::string_view>, 9> kCommands = {{
    {Command::TraceDistance, "trace-distance"},
    {Command::T1Curve, "t1-curve"},
    {Command::Survival, "survival"},
    {Command::Evolve, "evolve"},
    {Command::MapTTf, "map-t-tf"},
    {Command::MapTmTf, "map-tm-tf"},
    {Command::MapTmTd, "map-tm-td"},
    {Command::Repfintime, "repfintime"},
    {Command::AnalyticCheck, "analytic-check"},
}};

// Keys that are never echoed and never "unused".
const std::set<std::string, std::less<>> kUniversalKeys = {"command", "output", "threads", "preset"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_known_key(std::string_view key) {
  const auto& keys = config_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

void add_pair(KeyValues& kv, std::string_view line, std::size_t lineno) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
  }
  const std::string key(trim(line.substr(0, eq)));
  const std::string value(trim(line.substr(eq + 1)));
  if (!is_known_key(key)) throw ConfigError("unknown key '" + key + "'");
  if (value.empty()) throw ConfigError("key '" + key + "' has an empty value");
  if (!kv.emplace(key, value).second) throw ConfigError("key '" + key + "' given twice");
}

double parse_number(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError("key '" + key + "' expects a finite number, got '" + text + "'");
  }
  return v;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  unsigned long long v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("key '" + key + "' expects a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

// Reads merged key/values for one command, recording every key it consults
// so the echo holds exactly the inputs of the run.
class Resolver {
 public:
  Resolver(KeyValues values, std::string_view command) : values_(std::move(values)), command_(command) {}

  bool has(const std::string& key) const { return values_.contains(key); }

  double number(const std::string& key, double fallback) {
    const double v = has(key) ? parse_number(key, values_.at(key)) : fallback;
    resolved_[key] = format_config_number(v);
    return v;
  }

  double number(const std::string& key) {
    if (!has(key)) {
      throw ConfigError("missing required key '" + key + "' for command '" + std::string(command_) + "'");
    }
    return number(key, 0.0);
  }

  std::optional<double> optional_number(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return number(key, 0.0);
  }

  std::size_t count(const std::string& key, std::size_t fallback) {
    const std::size_t v = has(key) ? parse_count(key, values_.at(key)) : fallback;
    resolved_[key] = std::to_string(v);
    return v;
  }

  /// Rejects keys that were set but play no role in this command.
  KeyValues finish() {
    for (const auto& [key, value] : values_) {
      if (kUniversalKeys.contains(key) || resolved_.contains(key)) continue;
      throw ConfigError("key '" + key + "' is not used by command '" + std::string(command_) + "'");
    }
    resolved_["command"] = std::string(command_);
    return resolved_;
  }

 private:
  KeyValues values_;
  std::string_view command_;
  KeyValues resolved_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

// Constraints that hold regardless of command, checked before anything else.
void check_generic(const KeyValues& kv) {
  auto num = [&](const char* key) -> std::optional<double> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return parse_number(key, it->second);
  };
  for (const char* key : {"t_m", "t_f", "t_d", "t_offset", "total_time", "eval_t", "g"}) {
    if (auto v = num(key)) require(*v >= 0.0, std::string(key) + " must be >= 0");
  }
  if (auto v = num("sample_dt")) require(*v > 0.0, "sample_dt must be > 0");
  if (auto v = num("gamma")) require(*v > 0.0, "gamma must be > 0");
  auto tm = num("t_m");
  auto td = num("t_d");
  if (tm && td) require(*td >= *tm, "t_d must be ≥ t_m (t_f = t_d - t_m would be negative)");
  require(!(kv.contains("t_f") && kv.contains("t_d")), "set either t_f or t_d, not both");
  for (const char* axis : {"t", "tm", "tf", "td", "delta"}) {
    auto lo = num((std::string(axis) + "_min").c_str());
    auto hi = num((std::string(axis) + "_max").c_str());
    if (lo && hi) require(*lo < *hi, std::string(axis) + "_min must be < " + axis + "_max");
  }
  if (auto it = kv.find("sites"); it != kv.end()) {
    require(parse_count("sites", it->second) >= 1, "sites must be >= 1");
  }
  if (auto it = kv.find("points"); it != kv.end()) {
    require(parse_count("points", it->second) >= 2, "points must be >= 2");
  }
  if (auto it = kv.find("threads"); it != kv.end()) {
    require(parse_count("threads", it->second) >= 1, "threads must be >= 1");
  }
}

void read_chain(Resolver& r, RunConfig& cfg, std::size_t default_sites) {
  cfg.chain.sites = r.count("sites", default_sites);
  cfg.chain.epsilon = r.number("epsilon", 0.0);
  cfg.chain.gamma = r.number("gamma", 1.0);
}

void read_qubit(Resolver& r, RunConfig& cfg) {
  cfg.qubit.c0 = {r.number("c0_re", 1.0), r.number("c0_im", 0.0)};
  cfg.qubit.c1 = {r.number("c1_re", 0.0), r.number("c1_im", 0.0)};
  const double norm = std::norm(cfg.qubit.c0) + std::norm(cfg.qubit.c1);
  require(std::abs(norm - 1.0) <= 1e-12, "|c0|^2 + |c1|^2 must equal 1");
}

Axis read_axis(Resolver& r, const std::string& prefix, const std::string& name, double lo, double hi,
               std::size_t points) {
  Axis a{name, r.number(prefix + "_min", lo), r.number(prefix + "_max", hi), points};
  require(a.min < a.max, prefix + "_min must be < " + prefix + "_max");
  return a;
}

void read_evolve(Resolver& r, RunConfig& cfg) {
  read_chain(r, cfg, 15);
  cfg.apparatus.delta = r.number("delta", 0.0);
  const auto g = r.optional_number("g");
  const auto tm = r.optional_number("t_m");
  require(g || tm, "missing required key 'g' or 't_m' for command 'evolve'");
  if (g && tm) {
    require(*g > 0.0 && std::abs(*tm - pi / *g) <= 1e-12 * *tm,
            "t_m and g are both set; t_m must equal pi/g");
  }
  if (tm) {
    cfg.schedule.t_m = *tm;
    cfg.apparatus.g = g ? *g : (*tm > 0.0 ? pi / *tm : 0.0);
  } else {
    require(*g > 0.0, "g must be > 0 for measurements (use t_m = 0 for free evolution)");
    cfg.apparatus.g = *g;
    cfg.schedule.t_m = pi / *g;
  }
  const auto tf = r.optional_number("t_f");
  const auto td = r.optional_number("t_d");
  if (td) {
    require(*td >= cfg.schedule.t_m, "t_d must be ≥ t_m (t_f = t_d - t_m would be negative)");
    cfg.t_d = *td;
    cfg.schedule.t_f = *td - cfg.schedule.t_m;
  } else if (tf) {
    cfg.schedule.t_f = *tf;
    cfg.t_d = cfg.schedule.t_m + *tf;
  } else {
    require(cfg.schedule.t_m == 0.0, "missing required key 't_f' or 't_d' for command 'evolve'");
  }
  cfg.schedule.t_offset = r.number("t_offset", 0.0);
  cfg.schedule.total_time = r.number("total_time", 5.0);
  cfg.schedule.sample_dt = r.number("sample_dt", 0.01);
  if (auto et = r.optional_number("eval_t")) {
    require(*et <= cfg.schedule.total_time, "eval_t must be <= total_time");
    cfg.eval_t = *et;
    cfg.schedule.extra_times.push_back(*et);
  }
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, n] : kCommands) {
    if (n == name) return cmd;
  }
  return std::nullopt;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "command", "sites",  "epsilon", "gamma",     "g",         "delta",  "t_m",    "t_f",
      "t_d",     "t_offset", "total_time", "sample_dt", "eval_t", "c0_re",  "c0_im",  "c1_re",
      "c1_im",   "t_min",  "t_max",   "tm_min",    "tm_max",    "tf_min", "tf_max", "td_min",
      "td_max",  "delta_min", "delta_max", "points", "output",  "threads", "preset"};
  return keys;
}

std::string format_config_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), ptr);
}

KeyValues parse_config_text(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back(text.substr(pos, end - pos));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  KeyValues kv;
  const auto block = std::find_if(lines.begin(), lines.end(),
                                  [](std::string_view l) { return trim(l) == "# config:"; });
  if (block != lines.end()) {
    // Emitted file: the config block is the run of "#   key = value" lines.
    for (auto it = block + 1; it != lines.end(); ++it) {
      const std::string_view l = *it;
      if (!l.starts_with("#   ")) break;
      add_pair(kv, trim(l.substr(1)), static_cast<std::size_t>(it - lines.begin()) + 1);
    }
    return kv;
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view l = trim(lines[i]);
    if (l.empty() || l.front() == '#') continue;
    add_pair(kv, l, i + 1);
  }
  return kv;
}

KeyValues read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

KeyValues preset_values(std::string_view name) {
  const std::string pi_text = format_config_number(pi);
  if (name == "fig2") {
    return {{"command", "trace-distance"}, {"delta", "0"}, {"c0_re", "1"}, {"c0_im", "0"},
            {"c1_re", "0"}, {"c1_im", "0"}, {"tm_min", "0"}, {"tm_max", "1"}};
  }
  if (name == "fig3") {
    return {{"command", "t1-curve"}, {"c0_re", "1"}, {"c0_im", "0"}, {"c1_re", "0"},
            {"c1_im", "0"}, {"delta_min", "-3"}, {"delta_max", "3"}};
  }
  if (name == "fig4") {
    return {{"command", "survival"}, {"sites", "2"}, {"epsilon", "0"}, {"g", pi_text},
            {"delta", "0"}, {"total_time", "1"}};
  }
  if (name == "fig5") {
    return {{"command", "evolve"}, {"sites", "15"}, {"epsilon", "0"}, {"g", "100"},
            {"delta", "0"}, {"t_f", "0.9"}, {"total_time", "5"}};
  }
  if (name == "fig6") {
    return {{"command", "map-t-tf"}, {"sites", "15"}, {"epsilon", "0"}, {"g", "100"}, {"delta", "0"}};
  }
  if (name == "fig7") {
    return {{"command", "map-tm-tf"}, {"sites", "15"}, {"epsilon", "0"}, {"delta", "1.5"},
            {"eval_t", "5"}};
  }
  if (name == "fig8") {
    return {{"command", "map-tm-td"}, {"sites", "15"}, {"epsilon", "0"}, {"delta", "1.5"},
            {"eval_t", "5"}};
  }
  if (name == "fig9") {
    return {{"command", "repfintime"}, {"sites", "15"}, {"epsilon", "0"}, {"delta", "1.5"},
            {"t_d", "1.5"}, {"tm_min", "0.5"}, {"tm_max", "1"}, {"points", "3"}};
  }
  throw ConfigError("unknown preset '" + std::string(name) + "' (expected fig2 ... fig9)");
}

RunConfig resolve_config(const KeyValues& file_values, const KeyValues& flag_values) {
  for (const KeyValues* layer : {&file_values, &flag_values}) {
    for (const auto& [key, value] : *layer) {
      if (!is_known_key(key)) throw ConfigError("unknown key '" + key + "'");
    }
  }
  KeyValues merged;
  std::optional<std::string> preset;
  if (auto it = file_values.find("preset"); it != file_values.end()) preset = it->second;
  if (auto it = flag_values.find("preset"); it != flag_values.end()) preset = it->second;
  if (preset) merged = preset_values(*preset);
  for (const KeyValues* layer : {&file_values, &flag_values}) {
    for (const auto& [key, value] : *layer) merged[key] = value;
  }

  check_generic(merged);

  RunConfig cfg;
  const auto cmd_it = merged.find("command");
  if (cmd_it == merged.end()) throw ConfigError("missing required key 'command'");
  const auto command = parse_command(cmd_it->second);
  if (!command) throw ConfigError("unknown command '" + cmd_it->second + "'");
  cfg.command = *command;
  if (auto it = merged.find("output"); it != merged.end()) cfg.output = it->second;
  if (auto it = merged.find("threads"); it != merged.end()) cfg.threads = parse_count("threads", it->second);

  Resolver r(merged, command_name(cfg.command));
  switch (cfg.command) {
    case Command::TraceDistance:
      cfg.apparatus.delta = r.number("delta", 0.0);
      read_qubit(r, cfg);
      cfg.axis1 = read_axis(r, "tm", "t_m", 0.0, 1.0, r.count("points", 200));
      require(cfg.axis1->min >= 0.0, "tm_min must be >= 0");
      break;
    case Command::T1Curve:
      read_qubit(r, cfg);
      cfg.axis1 = read_axis(r, "delta", "delta", -3.0, 3.0, r.count("points", 200));
      break;
    case Command::Survival: {
      read_chain(r, cfg, 2);
      cfg.apparatus.g = r.number("g");
      cfg.apparatus.delta = r.number("delta", 0.0);
      const double g = cfg.apparatus.g;
      cfg.schedule.total_time = r.number("total_time", g > 0.0 ? pi / g : 1.0);
      cfg.schedule.sample_dt = r.number("sample_dt", 0.01);
      cfg.schedule.t_m = g > 0.0 ? cfg.schedule.total_time : 0.0;
      cfg.schedule.t_f = 0.0;
      break;
    }
    case Command::Evolve:
      read_evolve(r, cfg);
      break;
    case Command::MapTTf:
      read_chain(r, cfg, 15);
      cfg.apparatus.g = r.number("g", 100.0);
      require(cfg.apparatus.g > 0.0, "g must be > 0");
      cfg.apparatus.delta = r.number("delta", 0.0);
      {
        const std::size_t points = r.count("points", 100);
        cfg.axis1 = read_axis(r, "t", "t", 0.0, 5.0, points);
        cfg.axis2 = read_axis(r, "tf", "t_f", 0.0, 5.0, points);
      }
      require(cfg.axis1->min >= 0.0 && cfg.axis2->min >= 0.0, "t_min and tf_min must be >= 0");
      break;
    case Command::MapTmTf:
    case Command::MapTmTd: {
      const bool by_td = cfg.command == Command::MapTmTd;
      read_chain(r, cfg, 15);
      cfg.apparatus.delta = r.number("delta", 1.5);
      cfg.eval_t = r.number("eval_t", 5.0);
      const std::size_t points = r.count("points", 100);
      cfg.axis1 = read_axis(r, "tm", "t_m", 0.0, 5.0, points);
      cfg.axis2 = by_td ? read_axis(r, "td", "t_d", 0.0, 5.0, points)
                        : read_axis(r, "tf", "t_f", 0.0, 5.0, points);
      require(cfg.axis1->min >= 0.0, "tm_min must be >= 0");
      require(by_td || cfg.axis2->min >= 0.0, "tf_min must be >= 0");
      break;
    }
    case Command::Repfintime: {
      read_chain(r, cfg, 15);
      cfg.apparatus.delta = r.number("delta", 1.5);
      cfg.t_d = r.number("t_d", 1.5);
      const std::size_t points = r.count("points", 3);
      cfg.axis1 = read_axis(r, "tm", "t_m", 0.5, 1.0, points);
      require(cfg.axis1->min > 0.0, "tm_min must be > 0");
      require(cfg.axis1->max <= cfg.t_d, "t_d must be ≥ t_m (tm_max exceeds t_d)");
      cfg.schedule.total_time = r.number("total_time", 5.0);
      cfg.schedule.sample_dt = r.number("sample_dt", 0.01);
      break;
    }
    case Command::AnalyticCheck:
      break;
  }
  cfg.resolved = r.finish();
  return cfg;
}

}  // namespace zeno
