#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gplab/fit.hpp"
#include "gplab/kernels.hpp"
#include "gplab/norms.hpp"
#include "gplab/rational.hpp"

namespace gplab {

/// Exact 1/p for an exponent p ∈ [1, ∞]; ∞ maps to 0. Throws DomainError unless
/// 1/p is a rational with denominator at most 1000.
Rational inverse_exponent(double p);

enum class StrichartzRegime {
  trivial,             // (q, r) = (∞, 2)
  gp_high,             // k ≥ 0, 2/5 < q(1/2−1/r) ≤ 1
  gp_low_wave,         // k < 0, 1/2 < q(1/2−1/r) ≤ 1
  gp_low_mixed,        // k < 0, 2/5 < q(1/2−1/r) < 1/2
  gp_low_borderline,   // k < 0, q(1/2−1/r) = 1/2
  general_h1,          // q(1/2−1/r) > 1/(d−1)
  general_h2,          // 2/(2d−1) < q(1/2−1/r) < 1/(d−1)
  general_borderline,  // q(1/2−1/r) = 1/(d−1)
};

std::string to_string(StrichartzRegime r);

/// Dispersion exponents (α, β) used by the general law.
struct DispersionExponents {
  Rational alpha;
  Rational beta;
};

/// GP values: α = β = 2 for k ≥ 0, α = 1 and β = 3 for k < 0.
DispersionExponents gp_exponents(int k);

struct StrichartzPrediction {
  int k = 0;
  double q = 2;
  double r = 2;
  int d = 3;
  StrichartzRegime regime = StrichartzRegime::trivial;
  Rational theta;
  // Set on the borderline: the constant carries ⟨log_argument⟩^{2/q}.
  bool log_factor = false;
  double log_argument = 0;
  double log2_constant = 0;
  double constant = 1;
};

/// ⟨a⟩ = (2 + a²)^{1/2}.
double japanese_bracket(double a);

/// C_k(q, r) for the GP symbol in three dimensions. Throws DomainError when no
/// case of the law applies.
StrichartzPrediction predict_constant_gp(int k, double q, double r);

/// 2^{kθ_k(q,r)} for a symbol with exponents (α, β) in dimension d ≥ 2.
StrichartzPrediction predict_constant_general(DispersionExponents ab, int k, double q, double r,
                                              int d);

enum class Profile { band_indicator, band_gaussian };

std::string to_string(Profile p);
Profile parse_profile(const std::string& name);

struct MeasureOptions {
  std::size_t n = 2048;
  std::size_t nt = 512;
  std::size_t nt_linear = 64;
  Profile profile = Profile::band_gaussian;
  std::optional<double> window;  // overrides the window policy
};

struct MixedNormResult {
  int k = 0;
  double q = 2;
  double r = 2;
  double window = 0;
  Profile profile = Profile::band_gaussian;
  double measured = 0;
  double predicted = 0;
  double ratio = 0;
  double tail_fraction = 0;
  double tail_slope = 0;
  bool tail_flagged = false;
};

/// Window T = min(2^{10 − min(αk, 2k)}, 10⁴, 0.8·r_max/v_max) for the GP symbol,
/// v_max the largest group velocity on supp χ_k.
double window_policy(int k, double r_max);

/// Time nodes: nt_linear points on [0, t₀] with t₀ = 2^{−k}/ω′(2^k), then
/// log-spaced nodes up to T, nt in total.
std::vector<double> time_nodes(int k, double window, std::size_t nt, std::size_t nt_linear);

/// ‖e^{−itH}φ‖_{L_t^q L_x^r L_σ²}/‖φ‖₂ over t ∈ ℝ for the band-k profile, using
/// symmetry in t and a fitted power-law tail beyond T.
MixedNormResult measure_constant(int k, double q, double r, MeasureOptions opts = {});

struct SlopeFit {
  double q = 2;
  double r = 2;
  bool nonnegative_k = true;
  std::vector<int> ks;
  LineFit fit;
  double predicted_slope = 0;
  double tolerance = 0.1;
  double ratio_spread = 0;  // max ratio / min ratio
  bool pass = false;
};

struct ScanCell {
  int k = 0;
  double q = 2;
  double r = 2;
  std::optional<MixedNormResult> result;
  std::string error;
};

struct ScanResult {
  std::vector<ScanCell> cells;
  std::vector<SlopeFit> fits;
};

/// Measures every (k, q, r) cell, then fits log₂ measured against k separately
/// over k ≥ 0 and k < 0. A fit passes when the slope is within tolerance of θ
/// (±0.1, or ±0.01 for (∞, 2)) and the ratio spread is below 4.
ScanResult scan(const std::vector<int>& ks, const std::vector<std::pair<double, double>>& qr,
                MeasureOptions opts = {}, Execution exec = Execution::parallel);

}  // namespace gplab
