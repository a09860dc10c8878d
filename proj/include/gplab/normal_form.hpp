#pragma once

#include "gplab/gp_state.hpp"
#include "gplab/sign_convention.hpp"

namespace gplab {

/// R = −Δu₂²/(2(2−Δ)) − (2+Δ)u₁²/(2(2−Δ)), evaluated spectrally.
RadialField compute_R(const GPState& state);
/// R = u₁ + |u|²/2 − z₁ with z₁ taken from transform_T.
RadialField compute_R_defining(const GPState& state);

enum class N31Form { defining, expanded };

/// Cubic term N₃¹(u). The defining form is 2(Ru₂ + (2/(2−Δ))[(2u₁²+u₂²)/(2−Δ)·Δu₂]);
/// the expanded form puts two derivatives on u₂ in every u₂³ term.
RadialField compute_N31(const GPState& state, N31Form form);

/// N_order(m, u) for order in 2..5, physical representation.
RadialField compute_nonlinearity(int order, const MState& m, const GPState& u,
                                 const SignConvention& conv = kFrozenSignConvention);
/// N₂ + N₃ + N₄ + N₅.
RadialField total_nonlinearity(const MState& m, const GPState& u,
                               const SignConvention& conv = kFrozenSignConvention);

/// m = u₁ + (2u₁²+u₂²)/(2−Δ) + iUu₂.
MState transform_T(const GPState& state);
/// Variant u₁ + (2−Δ)⁻¹u₂² + iUu₂ (no u₁² term, unit weight on u₂²).
MState transform_T_variant(const GPState& state);

struct InverseTOptions {
  double tol = 1e-12;
  int max_iter = 200;
  // When false, a low-frequency amplification flag on U⁻¹m₂ is an error.
  bool accept_low_frequency = true;
};

/// u₂ = U⁻¹m₂ and the fixed point u₁ = m₁ − (2u₁²+u₂²)/(2−Δ) from u₁ = m₁.
/// Throws NonContractionError if the H¹ increments grow or max_iter is hit.
GPState inverse_T(const MState& m, InverseTOptions opts = {});

}  // namespace gplab
