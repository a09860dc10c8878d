#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <random>
#include <string>

#include "gplab/field.hpp"

namespace gplab {

/// Perturbation u = ψ − 1 = u₁ + iu₂ of the GP field at time t; both parts real
/// and stored in physical representation.
struct GPState {
  double t = 0;
  RadialField u1;
  RadialField u2;

  static GPState zero(const RadialGrid& grid, double t = 0);
  static GPState from_real(const RadialGrid& grid, std::span<const double> u1,
                           std::span<const double> u2, double t = 0);
  const RadialGrid& grid() const { return u1.grid(); }
  // Largest |Im| relative to the largest |Re| over both components.
  double imaginary_leak() const;
  GPState scaled(double eps) const;
};

/// Normal-form variable m = m₁ + im₂ at time t.
struct MState {
  double t = 0;
  RadialField m;
};

struct EnergyReport {
  double e_total = 0;
  double e_kinetic = 0;
  double e_potential = 0;
  double l2_mass = 0;
};

/// Signs and the critical quintic coefficient in the cubic–quintic terms:
///   N₃ ∋ (2i/(2−Δ))·s_n3·m₁²u₂,  N₄ ∋ (2i/(2−Δ))·s_n4·2u₂m₁R,
///   N₅ = s_n5·[−(2i/(2−Δ))u₂R² + c_n5c·(i/(2−Δ))u₂|u|⁴].
struct SignConvention {
  int s_n3 = -1;
  int s_n4 = -1;
  int s_n5 = 1;
  boost::rational<std::int64_t> c_n5c{1, 2};

  double c_n5c_value() const { return boost::rational_cast<double>(c_n5c); }
  std::string describe() const;
  bool operator==(const SignConvention&) const = default;
};

/// Random smooth low-passed state with ‖u₁‖²_{H¹} + ‖u₂‖²_{H¹} = h1_norm².
GPState random_state(const RadialGrid& grid, std::mt19937_64& rng, double h1_norm);

/// √(‖u₁‖²_{H¹} + ‖u₂‖²_{H¹}).
double state_h1_norm(const GPState& s);

}  // namespace gplab
