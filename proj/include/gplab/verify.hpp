#pragma once

#include <cstdint>
#include <vector>

#include "gplab/gp_state.hpp"
#include "gplab/rational.hpp"
#include "gplab/sign_convention.hpp"

namespace gplab {

struct MResidual {
  double h = 0;
  double residual = 0;  // ‖i∂ₜm − Hm − ΣN_j‖₂
  double relative = 0;  // residual / ‖∂ₜm‖₂
};

/// ∂ₜm from a centered difference of transform_T across rk4_full steps ±h,
/// compared with the N₂…N₅ right side under `conv`.
MResidual verify_m_derivation(const GPState& state, const SignConvention& conv, double h);

struct RichardsonStudy {
  std::vector<MResidual> samples;  // h, h/2, h/4, ...
  std::vector<double> ratios;      // residual(h)/residual(h/2)
  bool second_order = false;       // every ratio within 4 ± 0.5
};

RichardsonStudy richardson_study(const GPState& state, const SignConvention& conv, double h0,
                                 int halvings = 3);

/// All sixteen sign/coefficient combinations.
std::vector<SignConvention> candidate_conventions();

struct ConventionSearch {
  std::vector<SignConvention> conventions;
  std::vector<RichardsonStudy> studies;
  // Index of the unique second-order convention, or −1 if none or several.
  int selected = -1;
};

ConventionSearch select_sign_convention(const GPState& state, double h0, int halvings = 3);

/// Zero-frequency quintic coefficients of ü₂ (Δ → 0) for u₂ = c, m₁ = 0.
struct QuinticReport {
  Rational n3_path;  // from the u₁² substitution in the cubic term: +c⁵/2
  Rational n5_path;  // from the critical quintic: −s_n5·c_n5c·c⁵
  Rational sum;
};

QuinticReport verify_quintic_cancellation(Rational c,
                                          const SignConvention& conv = kFrozenSignConvention);

}  // namespace gplab
