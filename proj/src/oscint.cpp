#include "gplab/oscint.hpp"

#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "gplab/errors.hpp"

namespace gplab {

namespace {

constexpr int kOrder = 20;

struct Rule {
  std::array<double, kOrder> x;
  std::array<double, kOrder> w;
};

const Rule& rule() {
  static const Rule r = [] {
    using G = boost::math::quadrature::gauss<double, kOrder>;
    Rule out{};
    const auto& ax = G::abscissa();
    const auto& aw = G::weights();
    const int half = kOrder / 2;
    for (int i = 0; i < half; ++i) {
      out.x[i] = -ax[i];
      out.w[i] = aw[i];
      out.x[kOrder - 1 - i] = ax[i];
      out.w[kOrder - 1 - i] = aw[i];
    }
    return out;
  }();
  return r;
}

std::complex<double> panel(const Phase& ph, const Amplitude& amp, double lo, double hi) {
  const Rule& r = rule();
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  std::complex<double> s = 0;
  for (int i = 0; i < kOrder; ++i) {
    const double x = c + h * r.x[i];
    s += r.w[i] * amp.value(x) * std::polar(1.0, ph.value(x));
  }
  return h * s;
}

// Integrates one segment with panel widths κ·(local wavelength), capped at cap.
std::complex<double> march(const Phase& ph, const Amplitude& amp, double a, double b, double kappa,
                           double cap, int& panels) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::complex<double> s = 0;
  double x = a;
  while (x < b) {
    const double scale = std::abs(ph.d1(x)) + std::sqrt(std::abs(ph.d2(x)));
    double w = scale > 0 ? kappa * two_pi / scale : cap;
    w = std::min(w, cap);
    // Look ahead so a panel never spans a region where the wavelength shrinks a lot.
    const double x2 = std::min(b, x + w);
    const double scale2 = std::abs(ph.d1(x2)) + std::sqrt(std::abs(ph.d2(x2)));
    if (scale2 > 0) w = std::min(w, kappa * two_pi / scale2);
    const double hi = (b - x - w < 1e-3 * w) ? b : std::min(b, x + w);
    s += panel(ph, amp, x, hi);
    ++panels;
    x = hi;
  }
  return s;
}

std::complex<double> integrate_at(const Phase& ph, const Amplitude& amp,
                                  const std::vector<double>& cuts, double kappa, int& panels) {
  const double cap = kappa * (cuts.back() - cuts.front()) / 8.0;
  std::complex<double> s = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    s += march(ph, amp, cuts[i], cuts[i + 1], kappa, cap, panels);
  }
  return s;
}

}  // namespace

Phase Phase::scaled(double lambda) const {
  Phase p;
  p.value = [f = value, lambda](double x) { return lambda * f(x); };
  p.d1 = [f = d1, lambda](double x) { return lambda * f(x); };
  p.d2 = [f = d2, lambda](double x) { return lambda * f(x); };
  return p;
}

double Amplitude::derivative(double x) const {
  if (d1) return d1(x);
  const double h = 1e-6 * std::max(1.0, std::abs(x));
  return (value(x + h) - value(x - h)) / (2.0 * h);
}

std::vector<double> stationary_points(const Phase& phase, double a, double b, int scan) {
  std::vector<double> roots;
  double x0 = a;
  double f0 = phase.d1(a);
  for (int i = 1; i <= scan; ++i) {
    const double x1 = a + (b - a) * i / scan;
    const double f1 = phase.d1(x1);
    if (f0 == 0.0 && x0 > a) {
      roots.push_back(x0);
    } else if (f0 * f1 < 0) {
      double lo = x0, hi = x1, flo = f0;
      for (int it = 0; it < 100 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = phase.d1(mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

QuadResult oscillatory_integral_ex(const Phase& phase, const Amplitude& amp, double a, double b,
                                   double tol) {
  if (!(tol >= 1e-12)) throw PreconditionError("oscillatory_integral: tol must be >= 1e-12");
  if (!(b > a)) throw PreconditionError("oscillatory_integral: need a < b");
  std::vector<double> cuts{a};
  for (double s : stationary_points(phase, a, b)) {
    if (s > cuts.back() && s < b) cuts.push_back(s);
  }
  cuts.push_back(b);
  double kappa = 2.0;
  int panels = 0;
  std::complex<double> coarse = integrate_at(phase, amp, cuts, kappa, panels);
  for (int round = 0; round < 4; ++round) {
    int fine_panels = 0;
    const std::complex<double> fine = integrate_at(phase, amp, cuts, kappa / 4.0, fine_panels);
    const double err = std::abs(fine - coarse);
    if (err <= tol) return {fine, err, fine_panels};
    kappa /= 4.0;
    coarse = fine;
  }
  throw QuadratureStall("oscillatory_integral: refinement stalled above tol");
}

std::complex<double> oscillatory_integral(const Phase& phase, const Amplitude& amp, double a,
                                          double b, double tol) {
  return oscillatory_integral_ex(phase, amp, a, b, tol).value;
}

VdcReport vdc_check(const Phase& phi, const Amplitude& amp, double a, double b, int k_order,
                    double lambda) {
  if (k_order != 1 && k_order != 2) throw PreconditionError("vdc_check: k_order must be 1 or 2");
  if (!(lambda > 0)) throw PreconditionError("vdc_check: lambda must be positive");
  constexpr int grid = 1024;
  int sign2 = 0;
  for (int i = 0; i <= grid; ++i) {
    const double x = a + (b - a) * i / grid;
    const double dk = k_order == 1 ? phi.d1(x) : phi.d2(x);
    if (!(std::abs(dk) >= 1.0 - 1e-12)) {
      throw PreconditionError("vdc_check: |phi^(k)| >= 1 fails at x=" + std::to_string(x));
    }
    if (k_order == 1) {
      const double d2 = phi.d2(x);
      const int s = (d2 > 0) - (d2 < 0);
      if (s != 0 && sign2 != 0 && s != sign2) {
        throw PreconditionError("vdc_check: phi' is not monotone");
      }
      if (s != 0) sign2 = s;
    }
  }
  double var = 0;
  constexpr int vgrid = 4096;
  double prev = std::abs(amp.derivative(a));
  for (int i = 1; i <= vgrid; ++i) {
    const double x = a + (b - a) * i / vgrid;
    const double cur = std::abs(amp.derivative(x));
    var += 0.5 * (prev + cur) * (b - a) / vgrid;
    prev = cur;
  }
  VdcReport r;
  r.lambda = lambda;
  r.integral_abs = std::abs(oscillatory_integral(phi.scaled(lambda), amp, a, b, 1e-11));
  r.bound = std::pow(lambda, -1.0 / k_order) * (std::abs(amp.value(b)) + var);
  r.ratio = r.integral_abs / r.bound;
  return r;
}

}  // namespace gplab
