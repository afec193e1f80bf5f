#pragma once

// Run configuration: flat `key = value` files, command-line overrides and
// figure presets, resolved into one validated RunConfig.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeno/dynamics.hpp"
#include "zeno/experiments.hpp"
#include "zeno/model.hpp"
#include "zeno/two_site.hpp"

namespace zeno {

enum class Command {
  TraceDistance,
  T1Curve,
  Survival,
  Evolve,
  MapTTf,
  MapTmTf,
  MapTmTd,
  Repfintime,
  AnalyticCheck,
};

std::string_view command_name(Command c);
std::optional<Command> parse_command(std::string_view name);

/// Raw key/value pairs, ordered by key.
using KeyValues = std::map<std::string, std::string>;

/// Every accepted configuration key.
const std::vector<std::string>& config_keys();

/// Parses `key = value` lines; '#' starts a comment line. A file emitted by
/// this tool is recognized by its "# config:" block, and only that block is
/// read, so output files can be fed back as configs.
KeyValues parse_config_text(std::string_view text);
KeyValues read_config_file(const std::filesystem::path& path);

/// Values pinned by a figure preset (`fig2` ... `fig9`). Throws ConfigError
/// for unknown names.
KeyValues preset_values(std::string_view name);

struct RunConfig {
  Command command = Command::AnalyticCheck;
  ChainParams chain;
  ApparatusParams apparatus;
  MeasurementSchedule schedule;
  double t_d = 0.0;
  double eval_t = 5.0;
  two_site::InitialQubit qubit;
  std::optional<Axis> axis1;
  std::optional<Axis> axis2;
  std::string output = "-";  ///< "-" writes to standard output
  std::size_t threads = 1;

  /// Resolved, command-relevant keys in canonical text form. Echoed into
  /// output headers; excludes output, threads and preset so the echo depends
  /// only on what is computed.
  KeyValues resolved;
};

/// Layers preset < file < flags, fills per-command defaults and validates.
/// The preset name may come from either layer (flags win).
RunConfig resolve_config(const KeyValues& file_values, const KeyValues& flag_values);

/// Shortest text that round-trips `v` exactly.
std::string format_config_number(double v);

}  // namespace zeno
