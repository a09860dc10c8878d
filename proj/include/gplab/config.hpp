#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gplab {

enum class Experiment {
  symbol_check,
  strichartz_scan,
  kernel_decay,
  bessel_check,
  evolve,
  normalform_verify,
  scatter,
};

std::string to_string(Experiment e);
/// Accepts the hyphenated subcommand names, e.g. "symbol-check".
Experiment parse_experiment(const std::string& name);
const std::vector<Experiment>& all_experiments();

using ConfigValue = std::variant<std::int64_t, double, bool, std::string>;

enum class ValueType { integer, real, boolean, text };

struct KeySpec {
  std::string name;
  ValueType type = ValueType::real;
  ConfigValue default_value;
  double min = -1e300;  // numeric range, inclusive
  double max = 1e300;
  std::vector<std::string> choices;  // allowed text values; empty means free text
  std::string help;
};

/// Typed keys accepted by an experiment, excluding experiment, seed and output_dir.
const std::vector<KeySpec>& schema(Experiment e);

/// Flat key=value configuration. Every value is validated against the schema;
/// unknown keys raise ConfigError naming the key.
class ExperimentConfig {
 public:
  explicit ExperimentConfig(Experiment e);

  Experiment experiment() const { return experiment_; }
  std::uint64_t seed = 20240611;
  std::string output_dir = "out";

  // Parses `text` for the key's type and range.
  void set(const std::string& key, const std::string& text);
  void set_value(const std::string& key, ConfigValue value);
  bool has(const std::string& key) const;

  std::int64_t get_int(const std::string& key) const;
  double get_double(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  const std::string& get_string(const std::string& key) const;
  // Comma-separated lists stored as text.
  std::vector<double> get_list(const std::string& key) const;

  const std::map<std::string, ConfigValue>& values() const { return values_; }

  std::string serialize() const;
  /// `experiment=` must be present unless `fallback` is given.
  static ExperimentConfig parse(const std::string& text, std::optional<Experiment> fallback = {});
  /// Applies key=value lines on top of this configuration.
  void merge_text(const std::string& text);

  bool operator==(const ExperimentConfig& o) const;

 private:
  const KeySpec& spec_for(const std::string& key) const;
  Experiment experiment_;
  std::map<std::string, ConfigValue> values_;
};

std::string format_value(const ConfigValue& v);

/// Parses "2:5,2:6,inf:2".
std::vector<std::pair<double, double>> parse_qr_list(const std::string& text);
std::vector<double> parse_number_list(const std::string& text);

}  // namespace gplab
