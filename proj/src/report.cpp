#include "gplab/report.hpp"

#include <cmath>

#include "gplab/errors.hpp"
#include "gplab/io.hpp"

namespace gplab {

namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

nlohmann::json config_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["experiment"] = to_string(c.experiment());
  j["seed"] = c.seed;
  j["output_dir"] = c.output_dir;
  for (const auto& [k, v] : c.values()) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, double>) j[k] = number(x);
          else j[k] = x;
        },
        v);
  }
  return j;
}

}  // namespace

std::string to_string(PlotKind k) {
  switch (k) {
    case PlotKind::slope: return "slope";
    case PlotKind::decay: return "decay";
    case PlotKind::cauchy: return "cauchy";
    case PlotKind::energy: return "energy";
  }
  return "unknown";
}

PlotKind parse_plot_kind(const std::string& s) {
  for (PlotKind k : {PlotKind::slope, PlotKind::decay, PlotKind::cauchy, PlotKind::energy}) {
    if (to_string(k) == s) return k;
  }
  throw DomainError("unknown plot kind '" + s + "'");
}

RunReport::RunReport(ExperimentConfig cfg) : config(std::move(cfg)), version(GPLAB_VERSION) {}

bool RunReport::all_pass() const {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void RunReport::add_output(const std::string& relative, const std::string& contents) {
  write_file_atomic(std::filesystem::path(config.output_dir) / relative, contents);
  outputs.push_back({relative, sha256_hex(contents), contents.size()});
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["config"] = config_json(config);
  j["version"] = version;
  j["wall_time_s"] = wall_time;
  j["pass"] = all_pass();
  j["checks"] = nlohmann::json::array();
  for (const Check& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"measured", number(c.measured)},
                           {"tolerance", number(c.tolerance)},
                           {"comparison", c.comparison},
                           {"detail", c.detail}});
  }
  j["outputs"] = nlohmann::json::array();
  for (const OutputFile& o : outputs) {
    j["outputs"].push_back({{"path", o.path}, {"sha256", o.sha256}, {"bytes", o.bytes}});
  }
  j["summary"] = summary;
  return j;
}

std::filesystem::path write_report(const RunReport& report) {
  const auto path = std::filesystem::path(report.config.output_dir) / "report.json";
  write_file_atomic(path, report.to_json().dump(2) + "\n");
  return path;
}

}  // namespace gplab
