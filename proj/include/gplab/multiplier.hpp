#pragma once

#include <functional>
#include <optional>
#include <string>

#include "gplab/field.hpp"

namespace gplab {

// Smooth even bump: η ≡ 1 on [0, 5/4], η ≡ 0 on [8/5, ∞).
double lp_eta(double x);
// χ_k(ρ) = η(ρ/2^k) − η(ρ/2^{k−1}), supported in [5/8·2^k, 8/5·2^k].
double lp_chi(int k, double rho);
// Symbol of P_{≤k}: η(ρ/2^k).
double lp_chi_le(int k, double rho);

// Symbols of the linearized GP operators.
double symbol_U(double rho);
double symbol_H(double rho);

enum class MultiplierKind { U, U_inv, H, inv_2mD, P_k, P_le_k, D, grad_mag, Hs_weight };

/// Radial Fourier multiplier, diagonal on the frequency side.
struct Multiplier {
  MultiplierKind kind = MultiplierKind::U;
  int k = 0;       // band for P_k / P_le_k
  double s = 0.0;  // order for Hs_weight

  static Multiplier U() { return {MultiplierKind::U}; }
  static Multiplier U_inv() { return {MultiplierKind::U_inv}; }
  static Multiplier H() { return {MultiplierKind::H}; }
  static Multiplier inv_2mD() { return {MultiplierKind::inv_2mD}; }
  static Multiplier P(int k) { return {MultiplierKind::P_k, k}; }
  static Multiplier P_le(int k) { return {MultiplierKind::P_le_k, k}; }
  static Multiplier D() { return {MultiplierKind::D}; }
  // |∇| as the Fourier symbol |ξ|; coincides with D.
  static Multiplier grad_mag() { return {MultiplierKind::grad_mag}; }
  static Multiplier Hs_weight(double s) { return {MultiplierKind::Hs_weight, 0, s}; }

  double symbol(double rho) const;
  std::string name() const;
};

struct LowFrequencyFlag {
  double mass_fraction = 0;  // share of ‖f‖₂² below ρ_cut
  double amplification = 0;  // U⁻¹(ρ₁), the largest gain on the grid
};

struct MultiplierResult {
  RadialField field;
  std::optional<LowFrequencyFlag> low_frequency;
};

/// Output is in frequency representation. For U_inv, flags the result when more
/// than 1e−3 of the L² mass sits below rho_cut.
MultiplierResult apply_multiplier(const RadialField& f, const Multiplier& m, double rho_cut = 0.1);
RadialField apply(const RadialField& f, const Multiplier& m);
RadialField apply_symbol(const RadialField& f, const std::function<double(double)>& symbol);

}  // namespace gplab
