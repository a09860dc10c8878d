#include "gplab/bessel.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <numbers>

#include "gplab/errors.hpp"
#include "gplab/oscint.hpp"

namespace gplab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_range(double nu, double r) {
  if (!(nu >= 0 && nu <= 201)) throw DomainError("bessel_j: order outside [0, 200]");
  if (!(r >= 0 && r <= 1e5)) throw DomainError("bessel_j: argument outside [0, 1e5]");
}

}  // namespace

double bessel_j_series(double nu, double r) {
  if (r == 0) return nu == 0 ? 1.0 : 0.0;
  const double x = 0.5 * r;
  double term = std::exp(nu * std::log(x) - std::lgamma(nu + 1.0));
  double sum = term;
  for (int k = 1; k < 1000; ++k) {
    term *= -x * x / (k * (k + nu));
    sum += term;
    if (k > x && std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_j_schlafli(double nu, double r) {
  Phase ph;
  ph.value = [=](double x) { return r * std::sin(x) - nu * x; };
  ph.d1 = [=](double x) { return r * std::cos(x) - nu; };
  ph.d2 = [=](double x) { return -r * std::sin(x); };
  Amplitude one{[](double) { return 1.0; }, [](double) { return 0.0; }};
  const double first = oscillatory_integral(ph, one, 0.0, kPi, 1e-12).real() / kPi;
  const double s = std::sin(nu * kPi);
  if (std::abs(s) < 1e-15) return first;
  boost::math::quadrature::exp_sinh<double> integrator;
  const double second = integrator.integrate(
      [=](double t) { return std::exp(-nu * t - r * std::sinh(t)); }, 0.0,
      std::numeric_limits<double>::infinity());
  return first - s / kPi * second;
}

BesselEval bessel_j(double nu, double r) {
  check_range(nu, r);
  BesselEval e;
  e.nu = nu;
  e.r = r;
  if (r <= std::max(10.0, 0.5 * nu)) {
    e.value = bessel_j_series(nu, r);
    e.method = BesselMethod::series;
  } else {
    e.value = bessel_j_schlafli(nu, r);
    e.method = BesselMethod::schlafli;
  }
  return e;
}

double bessel_jprime(double nu, double r) {
  if (r == 0) throw DomainError("bessel_jprime: r must be positive");
  return nu * bessel_j(nu, r).value / r - bessel_j(nu + 1.0, r).value;
}

double bessel_envelope(double nu, double r) {
  const double c = std::cbrt(r);
  return 1.0 / c * std::pow(1.0 + std::abs(r - nu) / c, -0.25);
}

std::vector<double> bessel_sweep_grid(std::span<const double> nu_list, double r_min, double r_max,
                                      int points) {
  std::vector<double> g;
  for (int i = 0; i < points; ++i) {
    g.push_back(r_min * std::pow(r_max / r_min, static_cast<double>(i) / (points - 1)));
  }
  for (double nu : nu_list) {
    const double w = 5.0 * std::cbrt(nu);
    for (int i = 0; i <= 40; ++i) {
      const double r = nu - w + 2.0 * w * i / 40.0;
      if (r >= r_min && r <= r_max) g.push_back(r);
    }
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

EnvelopeReport bessel_uniform_decay_check(std::span<const double> nu_list,
                                          std::span<const double> r_grid, Execution exec) {
  EnvelopeReport rep;
  rep.rows.resize(nu_list.size() * r_grid.size());
  for_each_index(rep.rows.size(), exec, [&](std::size_t idx) {
    const double nu = nu_list[idx / r_grid.size()];
    const double r = r_grid[idx % r_grid.size()];
    EnvelopeRow row;
    row.nu = nu;
    row.r = r;
    row.j = bessel_j(nu, r).value;
    row.jprime = nu * row.j / r - bessel_j(nu + 1.0, r).value;
    row.envelope = bessel_envelope(nu, r);
    row.ratio = (std::abs(row.j) + std::abs(row.jprime)) / row.envelope;
    rep.rows[idx] = row;
  });
  for (const auto& row : rep.rows) {
    rep.sup_ratio = std::max(rep.sup_ratio, row.ratio);
    if (row.r >= 2.0 * row.nu) rep.tail_amplitude = std::max(rep.tail_amplitude, std::abs(row.j) * std::sqrt(row.r));
  }
  return rep;
}

AsymptoticDecomp bessel_asymptotic_decomp(double nu, double r) {
  if (!(nu >= 11.0)) throw DomainError("bessel_asymptotic_decomp: requires nu >= 11");
  if (!(r > nu + std::cbrt(nu))) throw DomainError("bessel_asymptotic_decomp: requires r > nu + nu^(1/3)");
  AsymptoticDecomp d;
  d.nu = nu;
  d.r = r;
  const double s = r * r - nu * nu;
  const double theta = std::sqrt(s) - nu * std::acos(nu / r) - 0.25 * kPi;
  d.j = bessel_j(nu, r).value;
  d.main = std::sqrt(2.0 / kPi) * std::cos(theta) / std::pow(s, 0.25);
  d.h = d.j - d.main;
  d.envelope = r <= 2.0 * nu ? nu * nu / std::pow(s, 1.75) + 1.0 / r : 1.0 / r;
  d.ratio = std::abs(d.h) / d.envelope;
  return d;
}

}  // namespace gplab
