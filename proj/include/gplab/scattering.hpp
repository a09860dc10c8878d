#pragma once

#include <span>
#include <vector>

#include "gplab/gp_state.hpp"

namespace gplab {

enum class ProfileTransform {
  normal_form,  // m = T(u)
  variant,      // u₁ + (2−Δ)⁻¹u₂² + iUu₂
  linear,       // v = u₁ + iUu₂
};

struct ProfileSeries {
  ProfileTransform transform = ProfileTransform::normal_form;
  // distances[i][j] = ‖s(t_i) − s(t_j)‖_{H¹}
  std::vector<std::vector<double>> distances;
  // cauchy[i0] = sup_{i,j ≥ i0} distances[i][j]
  std::vector<double> cauchy;
};

struct ScatteringReport {
  std::vector<double> times;
  ProfileSeries primary;
  ProfileSeries variant;
  // ‖(2−Δ)⁻¹u₁²(t)‖_{H¹}
  std::vector<double> u1sq_decay;
  double m0_h1 = 0;  // ‖m‖_{H¹} of the first trajectory sample
};

/// s(t) = e^{itH}·P(u(t)) for the requested times (each must match a snapshot
/// time to 1e−9). The primary series uses `primary`; the variant transform is
/// always reported alongside.
ScatteringReport scattering_profile(std::span<const GPState> trajectory, std::span<const double> times,
                                    ProfileTransform primary = ProfileTransform::normal_form);

}  // namespace gplab
