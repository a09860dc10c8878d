#include "gplab/kernel_k.hpp"

#include <algorithm>
#include <cmath>

#include "gplab/errors.hpp"
#include "gplab/multiplier.hpp"

namespace gplab {

namespace {

constexpr double kKernelTol = 1e-10;

double chi0_squared(double rho) {
  const double c = lp_chi(0, rho);
  return c * c;
}

DecaySeries fit_series(std::vector<double> t, std::vector<KernelSample> samples) {
  DecaySeries s;
  s.t = std::move(t);
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double sup = samples[i].sup_abs;
    const bool ok = sup > std::max(1e3 * samples[i].max_error, 1e-12);
    s.sup_abs.push_back(sup);
    s.usable.push_back(ok);
    if (ok) {
      lx.push_back(std::log(s.t[i]));
      ly.push_back(std::log(sup));
    }
  }
  if (lx.size() < 4) throw FitDegenerate("kernel_decay_scan: fewer than 4 usable points");
  s.fit = fit_line(lx, ly);
  return s;
}

}  // namespace

Phase PhaseSpec::phase() const {
  if (symbol == nullptr) throw PreconditionError("PhaseSpec: symbol not set");
  const SymbolSpec* w = symbol;
  const double s = std::ldexp(1.0, k);
  const double tt = t, xx = x;
  Phase p;
  p.value = [=](double r) { return tt * w->omega(s * r) + xx * r; };
  p.d1 = [=](double r) { return tt * s * w->omega1(s * r) + xx; };
  p.d2 = [=](double r) { return tt * s * s * w->omega2(s * r); };
  return p;
}

QuadResult kernel_K_ex(const SymbolSpec& spec, int k, double t, double x) {
  const PhaseSpec ps{&spec, k, t, x};
  Amplitude amp{chi0_squared, {}};
  return oscillatory_integral_ex(ps.phase(), amp, kChi0Lower, kChi0Upper, kKernelTol);
}

std::complex<double> kernel_K(const SymbolSpec& spec, int k, double t, double x) {
  return kernel_K_ex(spec, k, t, x).value;
}

KernelSample kernel_sample(const SymbolSpec& spec, int k, double t, std::vector<double> x_grid) {
  KernelSample s;
  s.k = k;
  s.t = t;
  s.x_grid = std::move(x_grid);
  for (double x : s.x_grid) {
    const QuadResult q = kernel_K_ex(spec, k, t, x);
    s.values.push_back(q.value);
    s.sup_abs = std::max(s.sup_abs, std::abs(q.value));
    s.max_error = std::max(s.max_error, q.error_estimate);
  }
  return s;
}

std::vector<double> stationary_window(const SymbolSpec& spec, int k, double t, int points) {
  const double s = std::ldexp(1.0, k);
  std::vector<double> xs;
  for (int i = 0; i < points; ++i) {
    const double rho = 0.8 + (1.25 - 0.8) * i / std::max(points - 1, 1);
    xs.push_back(-t * s * spec.omega1(s * rho));
  }
  return xs;
}

std::vector<double> far_window(int k, double alpha, double t, int points) {
  const double half = t * std::pow(2.0, k * alpha) / 100.0;
  std::vector<double> xs;
  for (int i = 0; i < points; ++i) xs.push_back(-half + 2.0 * half * i / std::max(points - 1, 1));
  return xs;
}

std::vector<double> geometric_times(double t_min, double t_max, int n) {
  std::vector<double> t;
  for (int i = 0; i < n; ++i) t.push_back(t_min * std::pow(t_max / t_min, static_cast<double>(i) / (n - 1)));
  return t;
}

DecayScan kernel_decay_scan(const SymbolSpec& spec, int k, const std::vector<double>& t_list,
                            DecayScanOptions opts) {
  if (t_list.size() < 8) throw PreconditionError("kernel_decay_scan: need at least 8 times");
  const double q0 = t_list[1] / t_list[0];
  for (std::size_t i = 1; i < t_list.size(); ++i) {
    if (!(t_list[i - 1] > 0) || std::abs(t_list[i] / t_list[i - 1] / q0 - 1.0) > 1e-6 || q0 <= 1.0) {
      throw PreconditionError("kernel_decay_scan: t_list must be increasing and geometric");
    }
  }
  DecayScan scan;
  scan.k = k;
  scan.alpha = opts.alpha.value_or(documented_exponents(spec, k).alpha);
  const std::size_t n = t_list.size();
  std::vector<KernelSample> stat(n), far(n);
  for_each_index(2 * n, opts.exec, [&](std::size_t idx) {
    const std::size_t i = idx % n;
    const double t = t_list[i];
    if (idx < n) {
      stat[i] = kernel_sample(spec, k, t, stationary_window(spec, k, t, opts.window_points));
    } else {
      far[i] = kernel_sample(spec, k, t, far_window(k, scan.alpha, t, opts.window_points));
    }
  });
  scan.stationary = fit_series(t_list, std::move(stat));
  scan.far = fit_series(t_list, std::move(far));
  return scan;
}

}  // namespace gplab
