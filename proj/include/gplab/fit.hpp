#pragma once

#include <span>

namespace gplab {

/// Ordinary least-squares line y = intercept + slope·x.
struct LineFit {
  double slope = 0;
  double intercept = 0;
  // Standard error of the slope; zero for an exact two-point fit.
  double slope_stderr = 0;
  int points = 0;

  // Half-width of the ~95% interval (two standard errors).
  double half_width() const { return 2.0 * slope_stderr; }
};

/// Throws FitDegenerate with fewer than two points or constant x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace gplab
