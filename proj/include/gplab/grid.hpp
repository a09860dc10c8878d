#pragma once

#include <cstddef>
#include <memory>
#include <span>

namespace gplab {

/// Radial grid on [0, r_max] with n interior nodes and a Dirichlet wall at r_max.
///
/// Physical nodes r_j = j·dr (j = 1..n) with dr = r_max/(n+1); frequency nodes
/// ρ_m = πm/r_max. The pair is exactly the type-I sine transform, so the discrete
/// round trip and Parseval identity hold to rounding. Copies share one immutable
/// FFTW plan set.
class RadialGrid {
 public:
  RadialGrid(std::size_t n, double r_max);

  std::size_t size() const;
  double r_max() const;
  double dr() const;
  double drho() const;

  // Zero-based accessors: r(0) = dr, rho(0) = π/r_max.
  double r(std::size_t j) const;
  double rho(std::size_t m) const;
  std::span<const double> radii() const;
  std::span<const double> frequencies() const;

  // Quadrature weights: ∫_{ℝ³} f = Σ_j w_j f(r_j) and the Plancherel counterpart
  // ∫|f|² = Σ_m ŵ_m |f̂(ρ_m)|².
  double physical_weight(std::size_t j) const;
  double frequency_weight(std::size_t m) const;

  // f̂(ρ_m) = (4π/ρ_m) Σ_j f(r_j) sin(ρ_m r_j) r_j dr.
  void forward(std::span<const double> phys, std::span<double> freq) const;
  // Exact discrete inverse of forward.
  void inverse(std::span<const double> freq, std::span<double> phys) const;
  // ∂_r of the band-limited interpolant of f, evaluated at the physical nodes.
  void radial_derivative(std::span<const double> freq, std::span<double> dphys) const;
  // Highest mode index kept by the 2/3 rule.
  std::size_t dealias_cutoff() const;

  bool operator==(const RadialGrid& other) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace gplab
