#include "gplab/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

#include "gplab/errors.hpp"

namespace gplab {

namespace {

// The FFTW planner is not thread safe; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct RadialGrid::Impl {
  std::size_t n;
  double r_max;
  double dr;
  double drho;
  std::vector<double> r;
  std::vector<double> rho;
  std::vector<double> wphys;
  std::vector<double> wfreq;
  fftw_plan dst = nullptr;
  fftw_plan dct = nullptr;

  Impl(std::size_t n_, double r_max_) : n(n_), r_max(r_max_) {
    dr = r_max / static_cast<double>(n + 1);
    drho = std::numbers::pi / r_max;
    r.resize(n);
    rho.resize(n);
    wphys.resize(n);
    wfreq.resize(n);
    constexpr double pi = std::numbers::pi;
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = static_cast<double>(j + 1) * dr;
      rho[j] = static_cast<double>(j + 1) * drho;
      wphys[j] = 4.0 * pi * r[j] * r[j] * dr;
      wfreq[j] = drho * rho[j] * rho[j] / (2.0 * pi * pi);
    }
    std::lock_guard lock(planner_mutex());
    double* a = fftw_alloc_real(n + 2);
    double* b = fftw_alloc_real(n + 2);
    const int ni = static_cast<int>(n);
    dst = fftw_plan_r2r_1d(ni, a, b, FFTW_RODFT00, FFTW_ESTIMATE | FFTW_UNALIGNED);
    dct = fftw_plan_r2r_1d(ni + 2, a, b, FFTW_REDFT00, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(a);
    fftw_free(b);
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(dst);
    fftw_destroy_plan(dct);
  }

  Impl(const Impl&) = delete;
  Impl& operator=(const Impl&) = delete;
};

RadialGrid::RadialGrid(std::size_t n, double r_max) {
  if (n < 64 || (n & (n - 1)) != 0) {
    throw PreconditionError("RadialGrid: n must be a power of two >= 64");
  }
  if (!(r_max > 0) || !std::isfinite(r_max)) {
    throw PreconditionError("RadialGrid: r_max must be positive");
  }
  impl_ = std::make_shared<const Impl>(n, r_max);
}

std::size_t RadialGrid::size() const { return impl_->n; }
double RadialGrid::r_max() const { return impl_->r_max; }
double RadialGrid::dr() const { return impl_->dr; }
double RadialGrid::drho() const { return impl_->drho; }
double RadialGrid::r(std::size_t j) const { return impl_->r[j]; }
double RadialGrid::rho(std::size_t m) const { return impl_->rho[m]; }
std::span<const double> RadialGrid::radii() const { return impl_->r; }
std::span<const double> RadialGrid::frequencies() const { return impl_->rho; }
double RadialGrid::physical_weight(std::size_t j) const { return impl_->wphys[j]; }
double RadialGrid::frequency_weight(std::size_t m) const { return impl_->wfreq[m]; }
std::size_t RadialGrid::dealias_cutoff() const { return (2 * impl_->n) / 3; }

bool RadialGrid::operator==(const RadialGrid& other) const {
  return impl_ == other.impl_ || (impl_->n == other.impl_->n && impl_->r_max == other.impl_->r_max);
}

void RadialGrid::forward(std::span<const double> phys, std::span<double> freq) const {
  const Impl& g = *impl_;
  std::vector<double> in(g.n), out(g.n);
  for (std::size_t j = 0; j < g.n; ++j) in[j] = g.r[j] * phys[j];
  fftw_execute_r2r(g.dst, in.data(), out.data());
  constexpr double pi = std::numbers::pi;
  // FFTW's RODFT00 carries a factor 2 relative to the plain sine sum.
  for (std::size_t m = 0; m < g.n; ++m) freq[m] = 2.0 * pi * g.dr * out[m] / g.rho[m];
}

void RadialGrid::inverse(std::span<const double> freq, std::span<double> phys) const {
  const Impl& g = *impl_;
  std::vector<double> in(g.n), out(g.n);
  for (std::size_t m = 0; m < g.n; ++m) in[m] = g.rho[m] * freq[m];
  fftw_execute_r2r(g.dst, in.data(), out.data());
  constexpr double pi = std::numbers::pi;
  for (std::size_t j = 0; j < g.n; ++j) phys[j] = g.drho * out[j] / (4.0 * pi * pi * g.r[j]);
}

void RadialGrid::radial_derivative(std::span<const double> freq, std::span<double> dphys) const {
  // f = G/r with G(r) = (dρ/2π²) Σ ρ_m f̂_m sin(ρ_m r), so f' = G'/r − G/r².
  const Impl& g = *impl_;
  std::vector<double> s_in(g.n), s_out(g.n), c_in(g.n + 2, 0.0), c_out(g.n + 2);
  for (std::size_t m = 0; m < g.n; ++m) {
    s_in[m] = g.rho[m] * freq[m];
    c_in[m + 1] = g.rho[m] * s_in[m];
  }
  fftw_execute_r2r(g.dst, s_in.data(), s_out.data());
  fftw_execute_r2r(g.dct, c_in.data(), c_out.data());
  constexpr double pi = std::numbers::pi;
  const double c = g.drho / (4.0 * pi * pi);
  for (std::size_t j = 0; j < g.n; ++j) {
    const double G = c * s_out[j];
    const double dG = c * c_out[j + 1];
    dphys[j] = dG / g.r[j] - G / (g.r[j] * g.r[j]);
  }
}

}  // namespace gplab
