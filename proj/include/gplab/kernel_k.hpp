#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gplab/fit.hpp"
#include "gplab/kernels.hpp"
#include "gplab/oscint.hpp"
#include "gplab/symbol.hpp"

namespace gplab {

/// Phase ψ(ρ) = t·ω(2^k ρ) + x·ρ on the support [5/8, 8/5] of χ₀.
struct PhaseSpec {
  const SymbolSpec* symbol = nullptr;
  int k = 0;
  double t = 0;
  double x = 0;

  Phase phase() const;
};

inline constexpr double kChi0Lower = 0.625;
inline constexpr double kChi0Upper = 1.6;

/// K(t, x) = ∫ e^{itω(2^kρ) + ixρ} χ₀(ρ)² dρ, quadrature tolerance 1e−10.
std::complex<double> kernel_K(const SymbolSpec& spec, int k, double t, double x);
QuadResult kernel_K_ex(const SymbolSpec& spec, int k, double t, double x);

struct KernelSample {
  int k = 0;
  double t = 0;
  std::vector<double> x_grid;
  std::vector<std::complex<double>> values;
  double sup_abs = 0;
  double max_error = 0;  // largest quadrature error estimate over the grid
};

KernelSample kernel_sample(const SymbolSpec& spec, int k, double t, std::vector<double> x_grid);

/// x = −t·2^k·ω′(2^k ρ*) for `points` values of ρ* spread over [0.8, 1.25].
std::vector<double> stationary_window(const SymbolSpec& spec, int k, double t, int points = 17);
/// `points` equispaced values in |x| ≤ t·2^{kα}/100.
std::vector<double> far_window(int k, double alpha, double t, int points = 17);

struct DecayScanOptions {
  // Defaults to the catalog α for the band.
  std::optional<double> alpha;
  int window_points = 17;
  Execution exec = Execution::parallel;
};

struct DecaySeries {
  std::vector<double> t;
  std::vector<double> sup_abs;
  std::vector<bool> usable;
  LineFit fit;  // log sup|K| against log t over usable points
};

struct DecayScan {
  int k = 0;
  double alpha = 0;
  DecaySeries stationary;
  DecaySeries far;
};

/// Fits the decay of sup_x|K(t, ·)| in both windows. A point is usable when
/// sup|K| > max(1e3·error estimate, 1e−12). Throws FitDegenerate when a window
/// has fewer than four usable points, and PreconditionError unless t_list is
/// geometric with at least eight points.
DecayScan kernel_decay_scan(const SymbolSpec& spec, int k, const std::vector<double>& t_list,
                            DecayScanOptions opts = {});

/// n points geometrically spaced on [t_min, t_max].
std::vector<double> geometric_times(double t_min, double t_max, int n);

}  // namespace gplab
