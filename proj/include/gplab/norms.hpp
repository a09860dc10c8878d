#pragma once

#include <limits>
#include <span>
#include <vector>

#include "gplab/field.hpp"

namespace gplab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class NormKind { lebesgue_r, sobolev_Hs, homog_sobolev, mixed_LqLr };

// Inner spatial norm used by mixed space-time norms.
enum class InnerNorm { lebesgue, sphere_mixed };

struct NormSpec {
  NormKind kind = NormKind::lebesgue_r;
  double q = kInf;
  double r = 2.0;
  double s = 0.0;
  double window = 0.0;  // T of [0, T], mixed norms only
  InnerNorm inner = InnerNorm::lebesgue;

  static NormSpec lebesgue(double r) { return {NormKind::lebesgue_r, kInf, r}; }
  static NormSpec sobolev(double s) { return {NormKind::sobolev_Hs, kInf, 2.0, s}; }
  static NormSpec homogeneous(double s) { return {NormKind::homog_sobolev, kInf, 2.0, s}; }
  static NormSpec mixed(double q, double r, double window, InnerNorm inner = InnerNorm::lebesgue) {
    return {NormKind::mixed_LqLr, q, r, 0.0, window, inner};
  }

  // Throws PreconditionError on exponents outside [1, ∞] or a kind/exponent mismatch.
  void validate() const;
};

struct NormValue {
  double value = 0;
  // Set when the outermost physical sample exceeds 1e−8 of the maximum.
  bool tail_flagged = false;
};

/// (4π ∫|f|^p r² dr)^{1/p}; max over nodes for p = ∞.
double lebesgue_norm(const RadialField& f, double p);
/// Radial L_x^p L_σ²: (4π)^{1/2} (∫|f|^p r² dr)^{1/p}; equals the L² norm at p = 2.
double sphere_mixed_norm(const RadialField& f, double p);
/// ‖⟨∇⟩^s f‖₂ via frequency weights.
double sobolev_norm(const RadialField& f, double s);
/// ‖|∇|^s f‖₂ via frequency weights.
double homogeneous_sobolev_norm(const RadialField& f, double s);
/// ‖⟨∇⟩^s f‖_{L^p} or ‖|∇|^s f‖_{L^p}.
double sobolev_lp_norm(const RadialField& f, double s, double p, bool homogeneous);

bool tail_flag(const RadialField& f);

/// Single-field norms; a mixed spec treats f as constant on [0, window].
NormValue norm_checked(const RadialField& f, const NormSpec& spec);
double norm(const RadialField& f, const NormSpec& spec);

/// Outer L^q over a sampled time series: trapezoid, or max for q = ∞.
double time_norm(std::span<const double> times, std::span<const double> values, double q);

/// Trajectory sampled uniformly on [0, window]; needs at least 16 samples.
double mixed_spacetime_norm(std::span<const RadialField> trajectory, double q, double r,
                            double window, InnerNorm inner = InnerNorm::lebesgue);

/// Resolution-space norms of a uniformly sampled trajectory on [0, window].
/// Intersections are summed over their components; N is an upper estimate
/// minimized over dyadic low/high splits F = P_{≤j}F + (1 − P_{≤j})F.
double x_norm(std::span<const RadialField> m, double window);
double y_norm(std::span<const RadialField> u1, double window);
double z_norm(std::span<const RadialField> u2, double window);
double n_norm(std::span<const RadialField> f, double window);

}  // namespace gplab
