#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "gplab/config.hpp"
#include "gplab/report.hpp"

namespace gplab {

/// Bytes an experiment will allocate for its largest grid; run() refuses
/// configurations above the limit before allocating anything.
std::size_t estimated_bytes(const ExperimentConfig& config);
inline constexpr std::size_t kMemoryLimit = std::size_t{2} << 30;

/// Executes the configured experiment, writes its CSV/JSON/field artifacts and
/// the plot data into config.output_dir, and returns the report (not yet written).
RunReport run(const ExperimentConfig& config);

struct FieldSummary {
  std::size_t n = 0;
  double r_max = 0;
  bool frequency = false;
  double t = 0;
  double l2 = 0;
  double max_abs = 0;
};

FieldSummary summarize_snapshot(const std::filesystem::path& path);
/// CSV of node index, coordinate, real and imaginary parts.
std::string dump_snapshot_csv(const std::filesystem::path& path);

struct FieldDiff {
  double max_abs = 0;
  double l2 = 0;       // ‖a − b‖₂
  double relative = 0; // ‖a − b‖₂ / ‖a‖₂
  double dt = 0;       // t_b − t_a
};

/// Both snapshots must share grid and representation.
FieldDiff diff_snapshots(const std::filesystem::path& a, const std::filesystem::path& b);

}  // namespace gplab
