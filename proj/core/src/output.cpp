#include "zeno/output.hpp"

#include <array>
#include <charconv>
#include <fstream>

#include "zeno/errors.hpp"

#ifndef ZENO_VERSION
#define ZENO_VERSION "0.0.0"
#endif

namespace zeno {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

}  // namespace

OutputHeader make_header(const RunConfig& cfg, std::vector<std::string> columns) {
  return {ZENO_VERSION, cfg.resolved, std::move(columns)};
}

std::string format_value(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf.data(), ptr);
}

std::string render_header(const OutputHeader& h) {
  std::string out = "# zeno " + h.version + "\n";
  out += "# units: ";
  out += kUnitsNote;
  out += "\n# config:\n";
  for (const auto& [key, value] : h.config) out += "#   " + key + " = " + value + "\n";
  out += "# columns: " + join(h.columns) + "\n";
  return out;
}

std::string render_series(const TimeSeries& series, const OutputHeader& h) {
  std::string out = render_header(h);
  for (const Sample& s : series.samples) {
    out += format_value(s.t) + ',' + format_value(s.rho00) + ',' + segment_code(s.segment) + '\n';
  }
  return out;
}

std::string render_curve(const Curve& curve, const OutputHeader& h) {
  std::string out = render_header(h);
  const bool companion = !curve.linear_approx.empty();
  for (std::size_t i = 0; i < curve.x.size(); ++i) {
    out += format_value(curve.x[i]) + ',' + format_value(curve.value[i]);
    if (companion) out += ',' + format_value(curve.linear_approx[i]);
    out += '\n';
  }
  return out;
}

std::string render_family(const std::vector<LabeledSeries>& family, const OutputHeader& h) {
  std::string out = render_header(h);
  for (const LabeledSeries& ls : family) {
    const std::string p = format_value(ls.parameter);
    for (const Sample& s : ls.series.samples) {
      out += p + ',' + format_value(s.t) + ',' + format_value(s.rho00) + ',' + segment_code(s.segment) + '\n';
    }
  }
  return out;
}

std::string render_heatmap(const HeatmapResult& map, const OutputHeader& h) {
  std::string out = render_header(h);
  const auto a1 = map.grid.axis1.values();
  const auto a2 = map.grid.axis2 ? map.grid.axis2->values() : std::vector<double>{0.0};
  for (std::size_t i = 0; i < map.rows(); ++i) {
    for (std::size_t j = 0; j < map.cols(); ++j) {
      out += format_value(a1[i]) + ',' + format_value(a2[j]) + ',';
      if (map.masked(i, j)) {
        out += ",1\n";
      } else {
        out += format_value(map.value(i, j)) + ",0\n";
      }
    }
  }
  return out;
}

void write_text(const std::string& text, const std::filesystem::path& path, std::ostream& stdout_stream) {
  if (path == "-") {
    stdout_stream << text;
    stdout_stream.flush();
    if (!stdout_stream) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

void emit_curve(const TimeSeries& series, const OutputHeader& h, const std::filesystem::path& path,
                std::ostream& stdout_stream) {
  write_text(render_series(series, h), path, stdout_stream);
}

void emit_curve(const Curve& curve, const OutputHeader& h, const std::filesystem::path& path,
                std::ostream& stdout_stream) {
  write_text(render_curve(curve, h), path, stdout_stream);
}

void emit_heatmap(const HeatmapResult& map, const OutputHeader& h, const std::filesystem::path& path,
                  std::ostream& stdout_stream) {
  write_text(render_heatmap(map, h), path, stdout_stream);
}

}  // namespace zeno
