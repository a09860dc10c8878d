#include "gplab/fit.hpp"

#include <cmath>

#include "gplab/errors.hpp"

namespace gplab {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw FitDegenerate("fit_line: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw FitDegenerate("fit_line: fewer than two points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0)) throw FitDegenerate("fit_line: constant abscissa");
  LineFit out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  out.points = static_cast<int>(n);
  if (n > 2) {
    double sse = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = y[i] - out.intercept - out.slope * x[i];
      sse += e * e;
    }
    out.slope_stderr = std::sqrt(sse / (n - 2) / sxx);
  }
  return out;
}

}  // namespace gplab
