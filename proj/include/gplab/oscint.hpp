#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace gplab {

using RealFn = std::function<double(double)>;

/// Real phase ψ with its first two derivatives.
struct Phase {
  RealFn value;
  RealFn d1;
  RealFn d2;

  Phase scaled(double lambda) const;
  Phase negated() const { return scaled(-1.0); }
};

/// Real amplitude; d1 is optional and falls back to central differences.
struct Amplitude {
  RealFn value;
  RealFn d1;

  double derivative(double x) const;
};

struct QuadResult {
  std::complex<double> value;
  double error_estimate = 0;  // |I(κ) − I(κ/4)| for the accepted panel scale κ
  int panels = 0;
};

/// ∫_a^b e^{iψ(x)} amp(x) dx by 20-point Gauss–Legendre panels sized by the local
/// wavelength 2π/(|ψ′| + √|ψ″|) and split at stationary points. Accepts once the
/// result agrees with a 4×-refined panelization to within tol; throws
/// QuadratureStall after four refinements.
QuadResult oscillatory_integral_ex(const Phase& phase, const Amplitude& amp, double a, double b,
                                   double tol);
std::complex<double> oscillatory_integral(const Phase& phase, const Amplitude& amp, double a,
                                          double b, double tol);

/// Roots of ψ′ in (a, b), located by a sign-change scan and bisection.
std::vector<double> stationary_points(const Phase& phase, double a, double b, int scan = 512);

struct VdcReport {
  double lambda = 0;
  double integral_abs = 0;
  double bound = 0;  // λ^{−1/k}[|amp(b)| + ∫|amp′|]
  double ratio = 0;
};

/// Compares |∫e^{iλφ}amp| with the van der Corput bound. Throws PreconditionError
/// if |φ^{(k)}| ≥ 1 fails on a 1024-point grid, or (k = 1) φ′ is not monotone.
VdcReport vdc_check(const Phase& phi, const Amplitude& amp, double a, double b, int k_order,
                    double lambda);

}  // namespace gplab
