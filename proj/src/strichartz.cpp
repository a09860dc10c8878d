#include "gplab/strichartz.hpp"

#include <algorithm>
#include <cmath>

#include "gplab/errors.hpp"
#include "gplab/field.hpp"
#include "gplab/grid.hpp"
#include "gplab/multiplier.hpp"

namespace gplab {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct ExponentPair {
  Rational iq;
  Rational ir;
};

ExponentPair checked_pair(double q, double r) {
  ExponentPair e{inverse_exponent(q), inverse_exponent(r)};
  if (e.iq > Rational(1, 2) || e.ir > Rational(1, 2)) {
    throw DomainError("Strichartz exponents must satisfy 2 <= q, r <= inf");
  }
  return e;
}

double group_velocity(double rho) { return (2.0 + 2.0 * rho * rho) / std::sqrt(2.0 + rho * rho); }

StrichartzPrediction finish(StrichartzPrediction p) {
  p.log2_constant = p.k * to_double(p.theta);
  if (p.log_factor) {
    p.log2_constant += 2.0 / p.q * std::log2(japanese_bracket(p.log_argument));
  }
  p.constant = std::exp2(p.log2_constant);
  return p;
}

[[noreturn]] void no_estimate(double q, double r) {
  throw DomainError("no estimate predicted for (q, r) = (" + std::to_string(q) + ", " +
                    std::to_string(r) + ")");
}

}  // namespace

Rational inverse_exponent(double p) {
  if (std::isinf(p) && p > 0) return Rational(0);
  if (!(p >= 1.0)) throw DomainError("exponent must lie in [1, inf]");
  const double x = 1.0 / p;
  for (std::int64_t den = 1; den <= 1000; ++den) {
    const double num = std::round(x * static_cast<double>(den));
    if (std::abs(x * static_cast<double>(den) - num) < 1e-12 * static_cast<double>(den)) {
      return Rational(static_cast<std::int64_t>(num), den);
    }
  }
  throw DomainError("exponent " + std::to_string(p) + " has no small rational inverse");
}

std::string to_string(StrichartzRegime r) {
  switch (r) {
    case StrichartzRegime::trivial: return "trivial";
    case StrichartzRegime::gp_high: return "gp_high";
    case StrichartzRegime::gp_low_wave: return "gp_low_wave";
    case StrichartzRegime::gp_low_mixed: return "gp_low_mixed";
    case StrichartzRegime::gp_low_borderline: return "gp_low_borderline";
    case StrichartzRegime::general_h1: return "general_h1";
    case StrichartzRegime::general_h2: return "general_h2";
    case StrichartzRegime::general_borderline: return "general_borderline";
  }
  return "unknown";
}

DispersionExponents gp_exponents(int k) {
  if (k >= 0) return {Rational(2), Rational(2)};
  return {Rational(1), Rational(3)};
}

double japanese_bracket(double a) { return std::sqrt(2.0 + a * a); }

StrichartzPrediction predict_constant_gp(int k, double q, double r) {
  const auto [iq, ir] = checked_pair(q, r);
  StrichartzPrediction p;
  p.k = k;
  p.q = q;
  p.r = r;
  p.d = 3;
  const Rational b = Rational(1, 2) - ir;  // q(1/2 − 1/r) = b/iq
  if (iq == Rational(0)) {
    if (b != Rational(0)) no_estimate(q, r);
    p.regime = StrichartzRegime::trivial;
    p.theta = Rational(0);
    return finish(p);
  }
  if (b > iq) no_estimate(q, r);
  if (k >= 0) {
    if (!(b > Rational(2, 5) * iq)) no_estimate(q, r);
    p.regime = StrichartzRegime::gp_high;
    p.theta = Rational(3, 2) - Rational(3) * ir - Rational(2) * iq;
  } else if (b > iq / Rational(2)) {
    p.regime = StrichartzRegime::gp_low_wave;
    p.theta = Rational(3, 2) - Rational(3) * ir - iq;
  } else if (b == iq / Rational(2)) {
    p.regime = StrichartzRegime::gp_low_borderline;
    p.theta = iq / Rational(2);
    p.log_factor = true;
    p.log_argument = k;
  } else if (b > Rational(2, 5) * iq) {
    p.regime = StrichartzRegime::gp_low_mixed;
    p.theta = Rational(7, 2) - Rational(7) * ir - Rational(3) * iq;
  } else {
    no_estimate(q, r);
  }
  return finish(p);
}

StrichartzPrediction predict_constant_general(DispersionExponents ab, int k, double q, double r,
                                              int d) {
  if (d < 2) throw DomainError("dimension must be at least 2");
  const auto [iq, ir] = checked_pair(q, r);
  StrichartzPrediction p;
  p.k = k;
  p.q = q;
  p.r = r;
  p.d = d;
  const Rational b = Rational(1, 2) - ir;
  const Rational dd(d);
  if (iq == Rational(0) && b == Rational(0)) {
    p.regime = StrichartzRegime::trivial;
    p.theta = Rational(0);
    return finish(p);
  }
  const Rational edge = iq / Rational(d - 1);
  if (b > edge) {
    p.regime = StrichartzRegime::general_h1;
    p.theta = dd / Rational(2) - dd * ir - ab.alpha * iq;
    return finish(p);
  }
  if (!(b > Rational(2, 2 * d - 1) * iq)) no_estimate(q, r);
  p.regime = b == edge ? StrichartzRegime::general_borderline : StrichartzRegime::general_h2;
  const Rational d1 = dd - Rational(1);
  p.theta = dd / Rational(2) - dd * ir - ab.beta * iq - (ab.alpha - ab.beta) * (d1 / Rational(2) - d1 * ir);
  if (b == edge) {
    p.log_factor = true;
    p.log_argument = k * to_double(ab.alpha - ab.beta);
  }
  return finish(p);
}

std::string to_string(Profile p) {
  return p == Profile::band_indicator ? "band_indicator" : "band_gaussian";
}

Profile parse_profile(const std::string& name) {
  if (name == "band_indicator") return Profile::band_indicator;
  if (name == "band_gaussian") return Profile::band_gaussian;
  throw DomainError("unknown profile '" + name + "'");
}

double window_policy(int k, double r_max) {
  const double alpha = k >= 0 ? 2.0 : 1.0;
  const double policy = std::exp2(10.0 - std::min(alpha * k, 2.0 * k));
  const double v_max = group_velocity(1.6 * std::ldexp(1.0, k));
  return std::min({policy, 1e4, 0.8 * r_max / v_max});
}

std::vector<double> time_nodes(int k, double window, std::size_t nt, std::size_t nt_linear) {
  if (nt_linear < 2 || nt <= nt_linear) throw PreconditionError("time_nodes: need nt > nt_linear >= 2");
  const double t0 = std::ldexp(1.0, -k) / group_velocity(std::ldexp(1.0, k));
  if (!(window > t0)) throw PreconditionError("time_nodes: window shorter than the transient");
  std::vector<double> t;
  for (std::size_t i = 0; i < nt_linear; ++i) {
    t.push_back(t0 * static_cast<double>(i) / static_cast<double>(nt_linear - 1));
  }
  const std::size_t nlog = nt - nt_linear;
  for (std::size_t i = 1; i <= nlog; ++i) {
    t.push_back(t0 * std::pow(window / t0, static_cast<double>(i) / static_cast<double>(nlog)));
  }
  return t;
}

MixedNormResult measure_constant(int k, double q, double r, MeasureOptions opts) {
  const double scale = std::ldexp(1.0, k);
  const RadialGrid grid(opts.n, kPi * static_cast<double>(opts.n) / (4.0 * scale));
  if (2.0 * scale > 0.5 * grid.rho(grid.size() - 1) * (1.0 + 1e-12)) {
    throw PreconditionError("measure_constant: grid does not resolve band " + std::to_string(k));
  }
  MixedNormResult res;
  res.k = k;
  res.q = q;
  res.r = r;
  res.profile = opts.profile;
  res.window = opts.window.value_or(window_policy(k, grid.r_max()));

  const std::size_t n = grid.size();
  std::vector<double> phi(n), h(n);
  double l2sq = 0;
  for (std::size_t m = 0; m < n; ++m) {
    const double rho = grid.rho(m);
    double v = lp_chi(k, rho);
    if (opts.profile == Profile::band_gaussian) {
      const double z = (rho - scale) / (0.25 * scale);
      v *= std::exp(-z * z);
    }
    phi[m] = v;
    h[m] = symbol_H(rho);
    l2sq += grid.frequency_weight(m) * v * v;
  }
  const double l2 = std::sqrt(l2sq);

  const std::vector<double> t = time_nodes(k, res.window, opts.nt, opts.nt_linear);
  std::vector<double> vals(t.size());
  std::vector<cplx> spec(n);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t m = 0; m < n; ++m) spec[m] = phi[m] * std::polar(1.0, -t[i] * h[m]);
    const RadialField f = RadialField(grid, Rep::frequency, spec).to_physical();
    const double nv = sphere_mixed_norm(f, r) / l2;
    vals[i] = std::isinf(q) ? nv : std::pow(nv, q);
  }

  if (std::isinf(q)) {
    res.measured = *std::max_element(vals.begin(), vals.end());
  } else {
    double integral = 0;
    for (std::size_t i = 1; i < t.size(); ++i) integral += 0.5 * (t[i] - t[i - 1]) * (vals[i] + vals[i - 1]);
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] > res.window / 8 && vals[i] > 0) {
        lx.push_back(std::log(t[i]));
        ly.push_back(std::log(vals[i]));
      }
    }
    double tail = kInf;
    if (lx.size() >= 2) {
      const LineFit fit = fit_line(lx, ly);
      res.tail_slope = fit.slope;
      if (fit.slope < -1.0) {
        tail = std::exp(fit.intercept) * std::pow(res.window, fit.slope + 1.0) / (-fit.slope - 1.0);
      }
    }
    res.tail_fraction = tail / integral;
    res.tail_flagged = !(res.tail_fraction <= 0.05);
    const double total = std::isfinite(tail) ? integral + tail : integral;
    res.measured = std::pow(2.0 * total, 1.0 / q);
  }
  res.predicted = predict_constant_gp(k, q, r).constant;
  res.ratio = res.measured / res.predicted;
  return res;
}

ScanResult scan(const std::vector<int>& ks, const std::vector<std::pair<double, double>>& qr,
                MeasureOptions opts, Execution exec) {
  ScanResult out;
  for (const auto& [q, r] : qr) {
    for (int k : ks) out.cells.push_back({k, q, r, std::nullopt, {}});
  }
  for_each_index(out.cells.size(), exec, [&](std::size_t i) {
    ScanCell& c = out.cells[i];
    try {
      c.result = measure_constant(c.k, c.q, c.r, opts);
    } catch (const std::exception& e) {
      c.error = e.what();
    }
  });

  for (const auto& [q, r] : qr) {
    for (bool nonneg : {true, false}) {
      SlopeFit sf;
      sf.q = q;
      sf.r = r;
      sf.nonnegative_k = nonneg;
      std::vector<double> x, y, ratios;
      for (const ScanCell& c : out.cells) {
        if (c.q != q || c.r != r || (c.k >= 0) != nonneg || !c.result) continue;
        sf.ks.push_back(c.k);
        x.push_back(c.k);
        y.push_back(std::log2(c.result->measured));
        ratios.push_back(c.result->ratio);
      }
      if (x.size() < 2) continue;
      sf.fit = fit_line(x, y);
      sf.predicted_slope = to_double(predict_constant_gp(sf.ks.front(), q, r).theta);
      sf.tolerance = (std::isinf(q) && r == 2.0) ? 0.01 : 0.1;
      const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
      sf.ratio_spread = *hi / *lo;
      sf.pass = std::abs(sf.fit.slope - sf.predicted_slope) <= sf.tolerance && sf.ratio_spread < 4.0;
      out.fits.push_back(std::move(sf));
    }
  }
  return out;
}

}  // namespace gplab
