#include "gplab/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "gplab/errors.hpp"
#include "gplab/io.hpp"

namespace gplab {

namespace {

KeySpec integer(std::string name, std::int64_t def, double lo, double hi, std::string help) {
  return {std::move(name), ValueType::integer, def, lo, hi, {}, std::move(help)};
}
KeySpec real(std::string name, double def, double lo, double hi, std::string help) {
  return {std::move(name), ValueType::real, def, lo, hi, {}, std::move(help)};
}
KeySpec boolean(std::string name, bool def, std::string help) {
  return {std::move(name), ValueType::boolean, def, 0, 1, {}, std::move(help)};
}
KeySpec text(std::string name, std::string def, std::vector<std::string> choices, std::string help) {
  return {std::move(name), ValueType::text, std::move(def), 0, 0, std::move(choices), std::move(help)};
}

std::string trim(std::string s) {
  const auto ws = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

double parse_real(const std::string& key, const std::string& s) {
  if (s == "inf" || s == "+inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError(key, "expected a number, got '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& key, const std::string& s) {
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError(key, "expected an integer, got '" + s + "'");
  return v;
}

template <class F>
void for_each_line(const std::string& text, F&& f) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected key=value");
    f(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::symbol_check: return "symbol-check";
    case Experiment::strichartz_scan: return "strichartz-scan";
    case Experiment::kernel_decay: return "kernel-decay";
    case Experiment::bessel_check: return "bessel-check";
    case Experiment::evolve: return "evolve";
    case Experiment::normalform_verify: return "normalform-verify";
    case Experiment::scatter: return "scatter";
  }
  return "unknown";
}

const std::vector<Experiment>& all_experiments() {
  static const std::vector<Experiment> all{Experiment::symbol_check,  Experiment::strichartz_scan,
                                           Experiment::kernel_decay,  Experiment::bessel_check,
                                           Experiment::evolve,        Experiment::normalform_verify,
                                           Experiment::scatter};
  return all;
}

Experiment parse_experiment(const std::string& name) {
  for (Experiment e : all_experiments()) {
    if (to_string(e) == name) return e;
  }
  throw ConfigError("experiment", "unknown experiment '" + name + "'");
}

const std::vector<KeySpec>& schema(Experiment e) {
  static const std::vector<KeySpec> symbol_check{
      text("name", "gp", {"gp", "schrodinger", "klein_gordon", "beam", "fourth_order"}, "catalog symbol"),
      text("params", "", {}, "comma-separated symbol parameters"),
      integer("kmin", -8, -30, 30, "first band"),
      integer("kmax", 8, -30, 30, "last band"),
      real("c_min", 0.05, 1e-6, 1.0, "smallest admissible lower-bound constant"),
      integer("grid_points", 256, 64, 1 << 16, "samples per band"),
  };
  static const std::vector<KeySpec> strichartz{
      text("symbol", "gp", {"gp"}, "dispersion relation"),
      integer("kmin", 0, -10, 10, "first band"),
      integer("kmax", 5, -10, 10, "last band"),
      text("qr", "2:5,2:6,inf:2", {}, "exponent pairs q:r"),
      text("profile", "band_gaussian", {"band_gaussian", "band_indicator"}, "initial profile"),
      integer("n", 2048, 64, 1 << 20, "radial nodes"),
      integer("nt", 512, 16, 1 << 16, "time samples"),
  };
  static const std::vector<KeySpec> kernel{
      text("symbol", "gp", {"gp", "schrodinger", "klein_gordon", "beam", "fourth_order"}, "catalog symbol"),
      text("params", "", {}, "comma-separated symbol parameters"),
      integer("k", 2, -12, 12, "band"),
      real("tmin", 10, 1e-3, 1e7, "first time"),
      real("tmax", 1000, 1e-3, 1e7, "last time"),
      integer("points", 16, 8, 256, "geometric time samples"),
      real("alpha", NAN, -1e3, 1e3, "far-window exponent; nan selects the catalog value"),
  };
  static const std::vector<KeySpec> bessel{
      text("nu_list", "0.5,5,11,50", {}, "orders"),
      real("numax", 200, 0, 200, "largest order kept from nu_list"),
      real("rmin", 1, 1e-6, 1e5, "smallest argument"),
      real("rmax", 1e4, 1e-6, 1e5, "largest argument"),
      integer("points", 200, 8, 100000, "log-spaced arguments"),
      real("envelope_bound", 3, 0, 1e6, "accepted sup ratio"),
      real("remainder_bound", 5, 0, 1e6, "accepted |h|/envelope"),
  };
  static const std::vector<KeySpec> evolve{
      integer("n", 1024, 64, 1 << 20, "radial nodes"),
      real("rmax", 100, 1e-3, 1e7, "domain radius"),
      real("dt", 5e-4, 1e-9, 10, "time step"),
      integer("steps", 20000, 1, 1e9, "number of steps"),
      real("delta", 0.05, 0, 10, "H1 size of the initial state"),
      text("scheme", "strang", {"strang", "rk4_full"}, "integrator"),
      integer("snapshot_every", 2000, 1, 1e9, "steps between snapshots"),
      boolean("nonlinear", true, "include nonlinear terms"),
      boolean("write_snapshots", true, "write field snapshot files"),
      real("drift_tol", 1e-6, 0, 1, "accepted relative energy drift"),
  };
  static const std::vector<KeySpec> normal_form{
      integer("trials", 50, 1, 100000, "random states"),
      integer("n", 1024, 64, 1 << 20, "radial nodes"),
      real("rmax", 100, 1e-3, 1e7, "domain radius"),
      real("delta", 0.05, 0, 1, "H1 size of random states"),
      real("h0", 1e-4, 1e-8, 1, "largest Richardson step"),
      real("residual_delta", 0.5, 0, 10, "H1 size of the state used for the derivation residual"),
      integer("halvings", 3, 2, 8, "Richardson halvings"),
      real("identity_tol", 1e-9, 0, 1, "accepted N31 relative error"),
      real("inverse_tol", 1e-10, 0, 1, "accepted inverse_T round-trip error"),
  };
  static const std::vector<KeySpec> scatter{
      integer("n", 4096, 64, 1 << 20, "radial nodes"),
      real("rmax", 512, 1e-3, 1e7, "domain radius"),
      real("dt", 5e-3, 1e-9, 10, "time step"),
      real("delta", 0.01, 0, 1, "H1 size of the initial state"),
      real("tmin", 5, 0, 1e6, "first profile time"),
      real("tmax", 50, 0, 1e6, "last profile time"),
      integer("samples", 10, 2, 10000, "profile times"),
      boolean("nonlinear", true, "include nonlinear terms"),
      real("cauchy_fraction", 0.02, 0, 10, "accepted final indicator relative to |m(0)|_H1"),
  };
  switch (e) {
    case Experiment::symbol_check: return symbol_check;
    case Experiment::strichartz_scan: return strichartz;
    case Experiment::kernel_decay: return kernel;
    case Experiment::bessel_check: return bessel;
    case Experiment::evolve: return evolve;
    case Experiment::normalform_verify: return normal_form;
    case Experiment::scatter: return scatter;
  }
  throw ConfigError("experiment", "no schema");
}

ExperimentConfig::ExperimentConfig(Experiment e) : experiment_(e) {
  for (const KeySpec& k : schema(e)) values_[k.name] = k.default_value;
}

const KeySpec& ExperimentConfig::spec_for(const std::string& key) const {
  for (const KeySpec& k : schema(experiment_)) {
    if (k.name == key) return k;
  }
  throw ConfigError(key, "unknown key for " + to_string(experiment_));
}

bool ExperimentConfig::has(const std::string& key) const { return values_.count(key) > 0; }

void ExperimentConfig::set(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  if (key == "experiment") {
    if (parse_experiment(s) != experiment_) throw ConfigError(key, "conflicts with " + to_string(experiment_));
    return;
  }
  if (key == "seed") {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError(key, "expected an unsigned integer");
    seed = v;
    return;
  }
  if (key == "output_dir") {
    if (s.empty()) throw ConfigError(key, "must not be empty");
    output_dir = s;
    return;
  }
  const KeySpec& k = spec_for(key);
  switch (k.type) {
    case ValueType::integer: set_value(key, parse_int(key, s)); break;
    case ValueType::real: set_value(key, parse_real(key, s)); break;
    case ValueType::boolean:
      if (s == "true" || s == "1") set_value(key, true);
      else if (s == "false" || s == "0") set_value(key, false);
      else throw ConfigError(key, "expected true or false");
      break;
    case ValueType::text: set_value(key, s); break;
  }
}

void ExperimentConfig::set_value(const std::string& key, ConfigValue value) {
  const KeySpec& k = spec_for(key);
  const auto range = [&](double v) {
    if (std::isnan(v) && k.type == ValueType::real) return;
    if (!(v >= k.min && v <= k.max)) {
      throw ConfigError(key, "value " + format_double(v) + " outside [" + format_double(k.min) + ", " +
                                 format_double(k.max) + "]");
    }
  };
  switch (k.type) {
    case ValueType::integer:
      if (!std::holds_alternative<std::int64_t>(value)) throw ConfigError(key, "expected an integer");
      range(static_cast<double>(std::get<std::int64_t>(value)));
      break;
    case ValueType::real:
      if (std::holds_alternative<std::int64_t>(value)) value = static_cast<double>(std::get<std::int64_t>(value));
      if (!std::holds_alternative<double>(value)) throw ConfigError(key, "expected a number");
      range(std::get<double>(value));
      break;
    case ValueType::boolean:
      if (!std::holds_alternative<bool>(value)) throw ConfigError(key, "expected a boolean");
      break;
    case ValueType::text: {
      if (!std::holds_alternative<std::string>(value)) throw ConfigError(key, "expected text");
      const auto& s = std::get<std::string>(value);
      if (!k.choices.empty() && std::find(k.choices.begin(), k.choices.end(), s) == k.choices.end()) {
        throw ConfigError(key, "'" + s + "' is not an allowed value");
      }
      break;
    }
  }
  values_[key] = std::move(value);
}

std::int64_t ExperimentConfig::get_int(const std::string& key) const {
  spec_for(key);
  return std::get<std::int64_t>(values_.at(key));
}
double ExperimentConfig::get_double(const std::string& key) const {
  spec_for(key);
  return std::get<double>(values_.at(key));
}
bool ExperimentConfig::get_bool(const std::string& key) const {
  spec_for(key);
  return std::get<bool>(values_.at(key));
}
const std::string& ExperimentConfig::get_string(const std::string& key) const {
  spec_for(key);
  return std::get<std::string>(values_.at(key));
}

std::vector<double> ExperimentConfig::get_list(const std::string& key) const {
  try {
    return parse_number_list(get_string(key));
  } catch (const DomainError& e) {
    throw ConfigError(key, e.what());
  }
}

std::string format_value(const ConfigValue& v) {
  if (std::holds_alternative<std::int64_t>(v)) return std::to_string(std::get<std::int64_t>(v));
  if (std::holds_alternative<double>(v)) return format_double(std::get<double>(v));
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
  return std::get<std::string>(v);
}

std::string ExperimentConfig::serialize() const {
  std::string out = "experiment=" + to_string(experiment_) + "\n";
  out += "seed=" + std::to_string(seed) + "\n";
  out += "output_dir=" + output_dir + "\n";
  for (const auto& [k, v] : values_) out += k + "=" + format_value(v) + "\n";
  return out;
}

void ExperimentConfig::merge_text(const std::string& text) {
  for_each_line(text, [this](const std::string& k, const std::string& v) { set(k, v); });
}

ExperimentConfig ExperimentConfig::parse(const std::string& text, std::optional<Experiment> fallback) {
  std::optional<Experiment> e = fallback;
  for_each_line(text, [&e](const std::string& k, const std::string& v) {
    if (k == "experiment") e = parse_experiment(v);
  });
  if (!e) throw ConfigError("experiment", "missing");
  ExperimentConfig cfg(*e);
  cfg.merge_text(text);
  return cfg;
}

bool ExperimentConfig::operator==(const ExperimentConfig& o) const {
  if (experiment_ != o.experiment_ || seed != o.seed || output_dir != o.output_dir) return false;
  if (values_.size() != o.values_.size()) return false;
  for (const auto& [k, v] : values_) {
    const auto it = o.values_.find(k);
    if (it == o.values_.end()) return false;
    if (std::holds_alternative<double>(v) && std::holds_alternative<double>(it->second)) {
      const double a = std::get<double>(v), b = std::get<double>(it->second);
      if (!(a == b || (std::isnan(a) && std::isnan(b)))) return false;
    } else if (v != it->second) {
      return false;
    }
  }
  return true;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(parse_real("list", item));
    } catch (const ConfigError&) {
      throw DomainError("'" + item + "' is not a number");
    }
  }
  return out;
}

std::vector<std::pair<double, double>> parse_qr_list(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("qr", "expected q:r, got '" + item + "'");
    out.emplace_back(parse_real("qr", trim(item.substr(0, colon))), parse_real("qr", trim(item.substr(colon + 1))));
  }
  if (out.empty()) throw ConfigError("qr", "no exponent pairs");
  return out;
}

}  // namespace gplab
