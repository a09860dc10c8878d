// Command-line runner: one subcommand per experiment plus snapshot utilities.
#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>

#include "gplab/errors.hpp"
#include "gplab/experiments.hpp"
#include "gplab/io.hpp"

namespace {

struct Common {
  std::string config_file;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  int jobs = 0;
};

struct ExperimentCommand {
  gplab::Experiment experiment;
  CLI::App* app = nullptr;
  std::map<std::string, std::optional<std::string>> flags;
  std::vector<std::string> params;  // repeated --param
};

std::string flag_name(const std::string& key) {
  std::string s = key;
  std::replace(s.begin(), s.end(), '_', '-');
  return "--" + s;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_file, "key=value file applied over the defaults")->check(CLI::ExistingFile);
  app->add_option("--out", c.out, "output directory");
  app->add_option("--seed", c.seed, "64-bit seed");
  app->add_option("--jobs", c.jobs, "worker threads (0 keeps the OpenMP default)")->check(CLI::NonNegativeNumber);
}

gplab::ExperimentConfig build_config(const ExperimentCommand& cmd, const Common& common) {
  gplab::ExperimentConfig cfg(cmd.experiment);
  if (!common.config_file.empty()) cfg.merge_text(gplab::read_file(common.config_file));
  for (const auto& [key, value] : cmd.flags) {
    if (value) cfg.set(key, *value);
  }
  if (!cmd.params.empty()) {
    std::string joined;
    for (const auto& p : cmd.params) joined += (joined.empty() ? "" : ",") + p;
    cfg.set("params", joined);
  }
  if (common.out) cfg.set("output_dir", *common.out);
  if (common.seed) cfg.seed = *common.seed;
  return cfg;
}

int execute(const gplab::ExperimentConfig& cfg) {
  const gplab::RunReport report = gplab::run(cfg);
  const auto path = gplab::write_report(report);
  for (const auto& c : report.checks) {
    std::printf("%s %s measured=%s %s %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                gplab::format_double(c.measured).c_str(), c.comparison.c_str(),
                gplab::format_double(c.tolerance).c_str(), c.detail.empty() ? "" : "  # ", c.detail.c_str());
  }
  std::printf("report: %s (%.3f s)\n", path.string().c_str(), report.wall_time);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gplab: dispersive-estimate and GP normal-form experiments"};
  app.set_version_flag("--version", std::string(GPLAB_VERSION));
  app.require_subcommand(1);
  Common common;

  std::vector<ExperimentCommand> commands;
  commands.reserve(gplab::all_experiments().size());
  for (gplab::Experiment e : gplab::all_experiments()) {
    ExperimentCommand cmd{e};
    cmd.app = app.add_subcommand(gplab::to_string(e), "run the " + gplab::to_string(e) + " experiment");
    add_common(cmd.app, common);
    commands.push_back(std::move(cmd));
  }
  for (ExperimentCommand& cmd : commands) {
    for (const gplab::KeySpec& k : gplab::schema(cmd.experiment)) {
      if (k.name == "params") {
        cmd.app->add_option("--param", cmd.params, "symbol parameter (repeatable)");
      }
      cmd.app->add_option(flag_name(k.name), cmd.flags[k.name], k.help);
    }
  }

  std::string dump_path;
  bool dump_csv = false;
  auto* dump = app.add_subcommand("field-dump", "summarize or print a field snapshot");
  dump->add_option("file", dump_path, "snapshot file")->required()->check(CLI::ExistingFile);
  dump->add_flag("--csv", dump_csv, "print every node as CSV");

  std::string diff_a, diff_b;
  auto* diff = app.add_subcommand("field-diff", "compare two field snapshots");
  diff->add_option("a", diff_a, "first snapshot")->required()->check(CLI::ExistingFile);
  diff->add_option("b", diff_b, "second snapshot")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; malformed command lines count as bad configuration.
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (common.jobs > 0) omp_set_num_threads(common.jobs);

  try {
    if (dump->parsed()) {
      if (dump_csv) {
        std::cout << gplab::dump_snapshot_csv(dump_path);
      } else {
        const auto s = gplab::summarize_snapshot(dump_path);
        std::printf("n=%zu r_max=%s rep=%s t=%s l2=%s max_abs=%s\n", s.n, gplab::format_double(s.r_max).c_str(),
                    s.frequency ? "frequency" : "physical", gplab::format_double(s.t).c_str(),
                    gplab::format_double(s.l2).c_str(), gplab::format_double(s.max_abs).c_str());
      }
      return 0;
    }
    if (diff->parsed()) {
      const auto d = gplab::diff_snapshots(diff_a, diff_b);
      std::printf("max_abs=%s l2=%s relative=%s dt=%s\n", gplab::format_double(d.max_abs).c_str(),
                  gplab::format_double(d.l2).c_str(), gplab::format_double(d.relative).c_str(),
                  gplab::format_double(d.dt).c_str());
      return 0;
    }
    for (const ExperimentCommand& cmd : commands) {
      if (cmd.app->parsed()) return execute(build_config(cmd, common));
    }
  } catch (const gplab::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
