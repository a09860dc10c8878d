#include "gplab/symbol.hpp"

#include <cmath>
#include <numeric>

#include "gplab/errors.hpp"
#include "gplab/fit.hpp"

namespace gplab {

namespace {

std::string kind_name(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::gp: return "gp";
    case SymbolKind::schrodinger: return "schrodinger";
    case SymbolKind::klein_gordon: return "klein_gordon";
    case SymbolKind::beam: return "beam";
    case SymbolKind::fourth_order: return "fourth_order";
  }
  return "unknown";
}

std::size_t expected_params(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::schrodinger:
    case SymbolKind::fourth_order:
      return 1;
    default:
      return 0;
  }
}

}  // namespace

SymbolSpec::SymbolSpec(SymbolKind kind, std::vector<double> params)
    : kind_(kind), params_(std::move(params)), name_(kind_name(kind)) {
  if (params_.size() != expected_params(kind_)) {
    throw DomainError(name_ + " expects " + std::to_string(expected_params(kind_)) +
                      " parameter(s), got " + std::to_string(params_.size()));
  }
  for (double p : params_) {
    if (!std::isfinite(p)) throw DomainError(name_ + ": non-finite parameter");
  }
  if (kind_ == SymbolKind::schrodinger && !(params_[0] > 0)) {
    throw DomainError("schrodinger: power a must be positive");
  }
  if (kind_ == SymbolKind::fourth_order && !(params_[0] >= 0)) {
    throw DomainError("fourth_order: coefficient eps must be non-negative");
  }
}

double SymbolSpec::derivative(int order, double r) const {
  switch (kind_) {
    case SymbolKind::gp: {
      const double s = 2.0 + r * r;
      switch (order) {
        case 0: return r * std::sqrt(s);
        case 1: return (2.0 + 2.0 * r * r) / std::sqrt(s);
        case 2: return (6.0 * r + 2.0 * r * r * r) / std::pow(s, 1.5);
        case 3: return 12.0 / std::pow(s, 2.5);
      }
      break;
    }
    case SymbolKind::schrodinger: {
      const double a = params_[0];
      switch (order) {
        case 0: return std::pow(r, a);
        case 1: return a * std::pow(r, a - 1.0);
        case 2: return a * (a - 1.0) * std::pow(r, a - 2.0);
        case 3: return a * (a - 1.0) * (a - 2.0) * std::pow(r, a - 3.0);
      }
      break;
    }
    case SymbolKind::klein_gordon: {
      const double s = 1.0 + r * r;
      switch (order) {
        case 0: return std::sqrt(s);
        case 1: return r / std::sqrt(s);
        case 2: return std::pow(s, -1.5);
        case 3: return -3.0 * r * std::pow(s, -2.5);
      }
      break;
    }
    case SymbolKind::beam: {
      const double r2 = r * r;
      const double s = 1.0 + r2 * r2;
      switch (order) {
        case 0: return std::sqrt(s);
        case 1: return 2.0 * r * r2 / std::sqrt(s);
        case 2: return (6.0 * r2 + 2.0 * r2 * r2 * r2) / std::pow(s, 1.5);
        case 3: return (12.0 * r - 12.0 * r * r2 * r2) / std::pow(s, 2.5);
      }
      break;
    }
    case SymbolKind::fourth_order: {
      const double e = params_[0];
      switch (order) {
        case 0: return r * r + e * r * r * r * r;
        case 1: return 2.0 * r + 4.0 * e * r * r * r;
        case 2: return 2.0 + 12.0 * e * r * r;
        case 3: return 24.0 * e * r;
      }
      break;
    }
  }
  throw DomainError("derivative order must be in 0..3");
}

double SymbolSpec::omega(double r) const { return derivative(0, r); }
double SymbolSpec::omega1(double r) const { return derivative(1, r); }
double SymbolSpec::omega2(double r) const { return derivative(2, r); }
double SymbolSpec::omega3(double r) const { return derivative(3, r); }

SymbolSpec catalog_lookup(const std::string& name, const std::vector<double>& params) {
  if (name == "gp") return SymbolSpec(SymbolKind::gp, params);
  if (name == "schrodinger") return SymbolSpec(SymbolKind::schrodinger, params);
  if (name == "klein_gordon") return SymbolSpec(SymbolKind::klein_gordon, params);
  if (name == "beam") return SymbolSpec(SymbolKind::beam, params);
  if (name == "fourth_order") return SymbolSpec(SymbolKind::fourth_order, params);
  throw DomainError("unknown symbol '" + name + "'");
}

double DyadicBand::lower() const { return std::ldexp(1.0, k - 1); }
double DyadicBand::upper() const { return std::ldexp(1.0, k + 1); }
double DyadicBand::sample(int i, int n) const {
  return lower() * std::pow(4.0, (i + 0.5) / n);
}

DyadicClassification classify_band(const SymbolSpec& spec, DyadicBand band, double alpha,
                                   double beta, ClassifyOptions opts) {
  if (opts.grid_points < 64) throw PreconditionError("classify_band: grid_points < 64");
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw PreconditionError("classify_band: non-finite exponent");
  }
  const int k = band.k;
  const double scale1 = std::pow(2.0, k * (alpha - 1.0));
  const double scale2 = std::pow(2.0, k * (beta - 2.0));
  const double two_k = std::ldexp(1.0, k);

  DyadicClassification out;
  out.k = k;
  out.alpha = alpha;
  out.beta = beta;
  out.c_lower_1 = INFINITY;
  out.c_lower_2 = INFINITY;
  out.ratio_bound = 0;
  bool convex = true;
  int last_sign = 0;

  for (int i = 0; i < opts.grid_points; ++i) {
    const double r = band.sample(i, opts.grid_points);
    const double w1 = spec.omega1(r);
    const double w2 = spec.omega2(r);
    const double w3 = spec.omega3(r);
    if (!std::isfinite(w1) || !std::isfinite(w2) || !std::isfinite(w3)) {
      throw DomainError(spec.name() + ": non-finite derivative at r=" + std::to_string(r));
    }
    out.c_lower_1 = std::min(out.c_lower_1, std::abs(w1) / scale1);
    out.c_lower_2 = std::min(out.c_lower_2, std::abs(w2) / scale2);
    const double ratio = w1 == 0.0 ? INFINITY : std::abs(w2) / std::abs(w1) * two_k;
    out.ratio_bound = std::max(out.ratio_bound, ratio);
    if (!(w1 * w2 > 0)) convex = false;
    const int sign = (w3 > 0) - (w3 < 0);
    if (sign != 0) {
      if (last_sign != 0 && sign != last_sign) ++out.sign_changes_omega3;
      last_sign = sign;
    }
  }

  out.h1 = out.c_lower_1 >= opts.c_min;
  out.h2 = out.h1 && out.c_lower_2 >= opts.c_min && out.ratio_bound <= 1.0 / opts.c_min &&
           k * (alpha - beta) >= 0;
  out.h3 = convex;
  return out;
}

ExponentSuggestion suggest_exponents(const SymbolSpec& spec, DyadicBand band, int grid_points) {
  std::vector<double> x, y1, y2;
  x.reserve(grid_points);
  int zero2 = 0;
  for (int i = 0; i < grid_points; ++i) {
    const double r = band.sample(i, grid_points);
    const double w1 = std::abs(spec.omega1(r));
    const double w2 = std::abs(spec.omega2(r));
    if (!(w1 > 0)) {
      throw FitDegenerate(spec.name() + ": omega' vanishes in band k=" + std::to_string(band.k));
    }
    if (!(w2 > 0)) ++zero2;
    x.push_back(std::log2(r));
    y1.push_back(std::log2(w1));
    y2.push_back(w2 > 0 ? std::log2(w2) : 0.0);
  }
  auto quarter = [](double v) { return std::round(4.0 * v) / 4.0; };
  ExponentSuggestion out;
  out.alpha = quarter(fit_line(x, y1).slope + 1.0);
  if (zero2 == grid_points) return out;
  if (zero2 > 0) {
    throw FitDegenerate(spec.name() + ": omega'' vanishes in band k=" + std::to_string(band.k));
  }
  out.beta = quarter(fit_line(x, y2).slope + 2.0);
  return out;
}

DocumentedBand documented_exponents(const SymbolSpec& spec, int k) {
  switch (spec.kind()) {
    case SymbolKind::gp:
      return k >= 0 ? DocumentedBand{2, 2, true, true, true} : DocumentedBand{1, 3, true, true, true};
    case SymbolKind::schrodinger: {
      const double a = spec.params()[0];
      if (a > 1) return {a, a, true, true, true};
      if (a == 1) return {1, 1, true, false, false};
      return {a, a, true, true, false};
    }
    case SymbolKind::klein_gordon:
      return k >= 0 ? DocumentedBand{1, -1, true, true, true} : DocumentedBand{2, 2, true, true, true};
    case SymbolKind::beam:
      return k >= 0 ? DocumentedBand{2, 2, true, true, true} : DocumentedBand{4, 4, true, true, true};
    case SymbolKind::fourth_order:
      return {2, 2, true, true, true};
  }
  throw DomainError("documented_exponents: unknown symbol");
}

}  // namespace gplab
