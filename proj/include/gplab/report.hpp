#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gplab/config.hpp"

namespace gplab {

struct Check {
  std::string name;
  bool pass = false;
  double measured = 0;
  double tolerance = 0;
  // How measured relates to tolerance when passing: "<=", ">=" or "within".
  std::string comparison = "<=";
  std::string detail;
};

struct OutputFile {
  std::string path;  // relative to the output directory
  std::string sha256;
  std::uint64_t bytes = 0;
};

enum class PlotKind { slope, decay, cauchy, energy };

std::string to_string(PlotKind k);
PlotKind parse_plot_kind(const std::string& s);

struct Curve {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  // Optional fitted line drawn dashed over the data, with its annotation.
  std::vector<double> fit_x;
  std::vector<double> fit_y;
  std::string fit_label;
};

struct Series {
  PlotKind kind = PlotKind::slope;
  std::string name;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = true;
  std::vector<Curve> curves;
};

struct RunReport {
  ExperimentConfig config;
  std::string version;
  double wall_time = 0;
  std::vector<Check> checks;
  std::vector<OutputFile> outputs;
  std::vector<Series> series;
  nlohmann::json summary = nlohmann::json::object();

  explicit RunReport(ExperimentConfig cfg);

  bool all_pass() const;
  void add_check(Check c) { checks.push_back(std::move(c)); }
  /// Writes `contents` to output_dir/relative atomically and records its hash.
  void add_output(const std::string& relative, const std::string& contents);

  nlohmann::json to_json() const;
};

/// Writes report.json into the configured output directory.
std::filesystem::path write_report(const RunReport& report);

/// For every series of `kind`: name.dat (blocks of two columns, one per curve,
/// separated by blank lines) and name.svg. Throws MissingSeries when the report
/// holds no series of that kind.
std::vector<std::filesystem::path> emit_plotdata(const RunReport& report, PlotKind kind,
                                                 const std::filesystem::path& dir);

/// Standalone SVG rendering of one series.
std::string render_svg(const Series& s);

}  // namespace gplab
