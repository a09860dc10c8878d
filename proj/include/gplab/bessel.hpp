#pragma once

#include <span>
#include <vector>

#include "gplab/kernels.hpp"

namespace gplab {

enum class BesselMethod { series, schlafli, asymptotic };

struct BesselEval {
  double nu = 0;
  double r = 0;
  double value = 0;
  BesselMethod method = BesselMethod::series;
};

/// J_ν(r) for 0 ≤ ν ≤ 200, 0 ≤ r ≤ 1e5: power series for r ≤ max(10, ν/2),
/// Schläfli's integral otherwise.
BesselEval bessel_j(double nu, double r);
double bessel_j_series(double nu, double r);
double bessel_j_schlafli(double nu, double r);
/// J_ν′ = νJ_ν/r − J_{ν+1}.
double bessel_jprime(double nu, double r);

/// r^{−1/3}(1 + r^{−1/3}|r − ν|)^{−1/4}
double bessel_envelope(double nu, double r);

struct EnvelopeRow {
  double nu = 0;
  double r = 0;
  double j = 0;
  double jprime = 0;
  double envelope = 0;
  double ratio = 0;  // (|J| + |J′|)/envelope
};

struct EnvelopeReport {
  std::vector<EnvelopeRow> rows;
  double sup_ratio = 0;
  // max over r ≥ 2ν of |J_ν(r)|·√r
  double tail_amplitude = 0;
};

EnvelopeReport bessel_uniform_decay_check(std::span<const double> nu_list,
                                          std::span<const double> r_grid,
                                          Execution exec = Execution::parallel);

/// Log grid on [r_min, r_max] with `points` nodes, plus 41 nodes across each
/// turning point ν ± 5ν^{1/3} that falls inside the range.
std::vector<double> bessel_sweep_grid(std::span<const double> nu_list, double r_min, double r_max,
                                      int points);

struct AsymptoticDecomp {
  double nu = 0;
  double r = 0;
  double j = 0;
  double main = 0;      // √(2/π) cos θ /(r²−ν²)^{1/4}
  double h = 0;         // j − main
  double envelope = 0;  // ν²/(r²−ν²)^{7/4} + 1/r on [ν+ν^{1/3}, 2ν]; 1/r beyond
  double ratio = 0;     // |h|/envelope
};

/// Requires ν ≥ 11 and r > ν + ν^{1/3}.
AsymptoticDecomp bessel_asymptotic_decomp(double nu, double r);

}  // namespace gplab
