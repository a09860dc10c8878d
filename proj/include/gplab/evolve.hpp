#pragma once

#include <functional>
#include <vector>

#include "gplab/gp_state.hpp"

namespace gplab {

/// Exact free flow: v = u₁ + iUu₂ ↦ e^{−iτH}v, then u₁ = Re v, u₂ = U⁻¹ Im v.
GPState linear_propagator(const GPState& state, double tau);

enum class Scheme { strang, rk4_full };

struct EvolveOptions {
  // Record every k-th step (the initial state is always recorded).
  int snapshot_every = 1;
  // Drop the nonlinear terms (free evolution through the same stepper).
  bool nonlinear = true;
  // Called on every recorded snapshot; its return value is ignored.
  std::function<void(const GPState&)> on_snapshot;
  // Keep snapshots in the returned trajectory.
  bool keep_trajectory = true;
};

/// Integrates the GP system for `steps` steps of size dt. Throws BlowUpError
/// carrying the step index once max|u| exceeds 1e6.
std::vector<GPState> evolve(const GPState& state, double dt, long steps, Scheme scheme,
                            const EvolveOptions& opts = {});

/// E = ∫|∇u|² + (|u|²+2u₁)²/2; the gradient term is evaluated on the frequency side.
EnergyReport energy(const GPState& state);

/// Pointwise potential density (|u|²+2u₁)²/2 integrated in expanded polynomial form;
/// an independent evaluation used to cross-check energy().
double potential_energy_expanded(const GPState& state);

}  // namespace gplab
