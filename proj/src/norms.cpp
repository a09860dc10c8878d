#include "gplab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gplab/errors.hpp"
#include "gplab/multiplier.hpp"

namespace gplab {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

void check_exponent(double p, const char* what) {
  if (!(p >= 1.0)) throw PreconditionError(std::string(what) + " exponent must lie in [1, ∞]");
}

// ∫|f|^p r² dr by the trapezoid rule on the physical nodes.
double radial_power_integral(const RadialField& f, double p) {
  const RadialField g = f.to_physical();
  const RadialGrid& grid = f.grid();
  double s = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    s += grid.r(j) * grid.r(j) * grid.dr() * std::pow(std::abs(g[j]), p);
  }
  return s;
}

double max_abs(const RadialField& f) {
  const RadialField g = f.to_physical();
  double m = 0;
  for (auto v : g.data()) m = std::max(m, std::abs(v));
  return m;
}

double weighted_l2(const RadialField& f, const std::function<double(double)>& w) {
  const RadialField h = f.to_frequency();
  const RadialGrid& g = f.grid();
  double s = 0;
  for (std::size_t m = 0; m < h.size(); ++m) {
    const double a = w(g.rho(m));
    s += g.frequency_weight(m) * a * a * std::norm(h[m]);
  }
  return std::sqrt(s);
}

std::vector<double> inner_series(std::span<const RadialField> traj, double r, InnerNorm inner) {
  std::vector<double> out(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out[i] = inner == InnerNorm::lebesgue ? lebesgue_norm(traj[i], r) : sphere_mixed_norm(traj[i], r);
  }
  return out;
}

std::vector<double> uniform_times(std::size_t n, double window) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = window * static_cast<double>(i) / static_cast<double>(n - 1);
  return t;
}

void check_trajectory(std::span<const RadialField> traj, double window) {
  if (traj.size() < 16) throw PreconditionError("mixed norm needs at least 16 time samples");
  if (!(window > 0)) throw PreconditionError("mixed norm window must be positive");
}

double mixed_of(std::span<const RadialField> traj, double q, double r, double window,
                const std::function<RadialField(const RadialField&)>& pre) {
  std::vector<double> g(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) g[i] = lebesgue_norm(pre(traj[i]), r);
  const auto t = uniform_times(traj.size(), window);
  return time_norm(t, g, q);
}

RadialField identity(const RadialField& f) { return f; }
RadialField grad(const RadialField& f) { return apply(f, Multiplier::D()); }

}  // namespace

void NormSpec::validate() const {
  check_exponent(r, "spatial");
  switch (kind) {
    case NormKind::lebesgue_r:
      break;
    case NormKind::sobolev_Hs:
    case NormKind::homog_sobolev:
      if (r != 2.0) throw PreconditionError("Sobolev H^s norms are L²-based");
      if (!std::isfinite(s)) throw PreconditionError("Sobolev order must be finite");
      break;
    case NormKind::mixed_LqLr:
      check_exponent(q, "time");
      if (!(window > 0)) throw PreconditionError("mixed norm window must be positive");
      break;
  }
}

double lebesgue_norm(const RadialField& f, double p) {
  check_exponent(p, "Lebesgue");
  if (std::isinf(p)) return max_abs(f);
  return std::pow(kFourPi * radial_power_integral(f, p), 1.0 / p);
}

double sphere_mixed_norm(const RadialField& f, double p) {
  check_exponent(p, "Lebesgue");
  const double c = std::sqrt(kFourPi);
  if (std::isinf(p)) return c * max_abs(f);
  return c * std::pow(radial_power_integral(f, p), 1.0 / p);
}

double sobolev_norm(const RadialField& f, double s) {
  return weighted_l2(f, [s](double rho) { return std::pow(1.0 + rho * rho, 0.5 * s); });
}

double homogeneous_sobolev_norm(const RadialField& f, double s) {
  return weighted_l2(f, [s](double rho) { return std::pow(rho, s); });
}

double sobolev_lp_norm(const RadialField& f, double s, double p, bool homogeneous) {
  const RadialField g = homogeneous ? apply_symbol(f, [s](double rho) { return std::pow(rho, s); })
                                    : apply(f, Multiplier::Hs_weight(s));
  return lebesgue_norm(g, p);
}

bool tail_flag(const RadialField& f) {
  const RadialField g = f.to_physical();
  const double m = max_abs(g);
  return m > 0 && std::abs(g[g.size() - 1]) > 1e-8 * m;
}

NormValue norm_checked(const RadialField& f, const NormSpec& spec) {
  spec.validate();
  NormValue out;
  out.tail_flagged = tail_flag(f);
  switch (spec.kind) {
    case NormKind::lebesgue_r:
      out.value = lebesgue_norm(f, spec.r);
      break;
    case NormKind::sobolev_Hs:
      out.value = sobolev_norm(f, spec.s);
      break;
    case NormKind::homog_sobolev:
      out.value = homogeneous_sobolev_norm(f, spec.s);
      break;
    case NormKind::mixed_LqLr: {
      const double inner = spec.inner == InnerNorm::lebesgue ? lebesgue_norm(f, spec.r)
                                                              : sphere_mixed_norm(f, spec.r);
      out.value = std::isinf(spec.q) ? inner : inner * std::pow(spec.window, 1.0 / spec.q);
      break;
    }
  }
  return out;
}

double norm(const RadialField& f, const NormSpec& spec) { return norm_checked(f, spec).value; }

double time_norm(std::span<const double> times, std::span<const double> values, double q) {
  if (times.size() != values.size() || times.size() < 2) {
    throw PreconditionError("time_norm: need matching series of length >= 2");
  }
  check_exponent(q, "time");
  if (std::isinf(q)) {
    double m = 0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0;
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    const double a = std::pow(std::abs(values[i]), q);
    const double b = std::pow(std::abs(values[i + 1]), q);
    s += 0.5 * (times[i + 1] - times[i]) * (a + b);
  }
  return std::pow(s, 1.0 / q);
}

double mixed_spacetime_norm(std::span<const RadialField> trajectory, double q, double r,
                            double window, InnerNorm inner) {
  check_trajectory(trajectory, window);
  check_exponent(q, "time");
  check_exponent(r, "spatial");
  const auto g = inner_series(trajectory, r, inner);
  const auto t = uniform_times(trajectory.size(), window);
  return time_norm(t, g, q);
}

double x_norm(std::span<const RadialField> m, double window) {
  check_trajectory(m, window);
  return mixed_of(m, kInf, 2, window, identity) + mixed_of(m, 2.5, 5, window, identity) +
         mixed_of(m, 3, 3, window, identity) + mixed_of(m, kInf, 2, window, grad) +
         mixed_of(m, 3, 3, window, grad);
}

double y_norm(std::span<const RadialField> u1, double window) {
  check_trajectory(u1, window);
  return mixed_of(u1, kInf, 3, window, identity) + mixed_of(u1, 2.5, 5, window, identity) +
         mixed_of(u1, 3, 6, window, identity) + mixed_of(u1, kInf, 2, window, grad) +
         mixed_of(u1, 3, 3, window, grad);
}

double z_norm(std::span<const RadialField> u2, double window) {
  check_trajectory(u2, window);
  return mixed_of(u2, 5, 10, window, identity) + mixed_of(u2, kInf, 2, window, grad) +
         mixed_of(u2, 3, 3, window, grad);
}

double n_norm(std::span<const RadialField> f, double window) {
  check_trajectory(f, window);
  auto inhom = [](const RadialField& g) { return apply(g, Multiplier::Hs_weight(1.0)); };
  auto split_cost = [&](const std::function<RadialField(const RadialField&)>& low) {
    auto high = [&](const RadialField& g) { return g - low(g); };
    auto low_inhom = [&](const RadialField& g) { return inhom(low(g)); };
    auto high_grad = [&](const RadialField& g) { return grad(high(g)); };
    return mixed_of(f, 1.5, 1.5, window, low_inhom) + mixed_of(f, 1, 2, window, high) +
           mixed_of(f, 1.5, 1.5, window, high_grad);
  };
  double best = split_cost([](const RadialField& g) { return g; });
  best = std::min(best, split_cost([](const RadialField& g) { return g * 0.0; }));
  const double top = std::log2(f[0].grid().rho(f[0].size() - 1));
  for (int j = -8; j <= static_cast<int>(std::ceil(top)); ++j) {
    best = std::min(best, split_cost([j](const RadialField& g) { return apply(g, Multiplier::P_le(j)); }));
  }
  return best;
}

}  // namespace gplab
