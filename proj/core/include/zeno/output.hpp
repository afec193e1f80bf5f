#pragma once

// CSV writers. Every file starts with a '#' block holding the tool version,
// a units note, the resolved config and the column schema; data rows follow
// with 17 significant digits and LF line endings.

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "zeno/config.hpp"
#include "zeno/dynamics.hpp"
#include "zeno/experiments.hpp"

namespace zeno {

inline constexpr const char* kUnitsNote = "hbar=1, energies in gamma, times in hbar/gamma";

struct OutputHeader {
  std::string version;
  KeyValues config;
  std::vector<std::string> columns;
};

OutputHeader make_header(const RunConfig& cfg, std::vector<std::string> columns);

/// 17 significant digits, general notation.
std::string format_value(double v);

std::string render_header(const OutputHeader& h);
std::string render_series(const TimeSeries& series, const OutputHeader& h);
std::string render_curve(const Curve& curve, const OutputHeader& h);
std::string render_family(const std::vector<LabeledSeries>& family, const OutputHeader& h);
std::string render_heatmap(const HeatmapResult& map, const OutputHeader& h);

/// Writes `text` to `path`; "-" goes to `stdout_stream`. Throws IoError.
void write_text(const std::string& text, const std::filesystem::path& path, std::ostream& stdout_stream);

void emit_curve(const TimeSeries& series, const OutputHeader& h, const std::filesystem::path& path,
                std::ostream& stdout_stream);
void emit_curve(const Curve& curve, const OutputHeader& h, const std::filesystem::path& path,
                std::ostream& stdout_stream);
void emit_heatmap(const HeatmapResult& map, const OutputHeader& h, const std::filesystem::path& path,
                  std::ostream& stdout_stream);

}  // namespace zeno
