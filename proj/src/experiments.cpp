#include "gplab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "gplab/bessel.hpp"
#include "gplab/errors.hpp"
#include "gplab/evolve.hpp"
#include "gplab/io.hpp"
#include "gplab/kernel_k.hpp"
#include "gplab/multiplier.hpp"
#include "gplab/normal_form.hpp"
#include "gplab/random_fields.hpp"
#include "gplab/scattering.hpp"
#include "gplab/sign_convention.hpp"
#include "gplab/snapshot.hpp"
#include "gplab/strichartz.hpp"
#include "gplab/symbol.hpp"
#include "gplab/verify.hpp"

namespace gplab {

namespace {

Check upper(std::string name, double measured, double tol, std::string detail = {}) {
  return {std::move(name), measured <= tol, measured, tol, "<=", std::move(detail)};
}

Check within(std::string name, double measured, double target, double tol, std::string detail = {}) {
  return {std::move(name), std::abs(measured - target) <= tol, measured, tol, "within",
          "target " + format_double(target) + (detail.empty() ? "" : "; " + detail)};
}

std::size_t checked_n(const ExperimentConfig& c) {
  const auto n = static_cast<std::size_t>(c.get_int("n"));
  if (n < 64 || (n & (n - 1)) != 0) throw ConfigError("n", "must be a power of two >= 64");
  return n;
}

std::vector<double> params_of(const ExperimentConfig& c) {
  return c.get_list("params");
}

// Sampled line y = exp(a + b·log x) (log_x) or y = 2^{a + b·x} over the curve's x range.
void overlay_fit(Curve& c, const LineFit& f, bool log_x, std::string label) {
  if (c.x.empty()) return;
  const auto [lo, hi] = std::minmax_element(c.x.begin(), c.x.end());
  for (int i = 0; i <= 32; ++i) {
    const double u = *lo + (*hi - *lo) * i / 32.0;
    const double x = log_x ? *lo * std::pow(*hi / *lo, i / 32.0) : u;
    c.fit_x.push_back(x);
    c.fit_y.push_back(log_x ? std::exp(f.intercept + f.slope * std::log(x)) : std::exp2(f.intercept + f.slope * x));
  }
  c.fit_label = std::move(label);
}

std::string slope_label(const LineFit& f) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "slope %.4f +/- %.4f", f.slope, f.half_width());
  return buf;
}

void run_symbol_check(RunReport& rep) {
  const ExperimentConfig& c = rep.config;
  const SymbolSpec spec = catalog_lookup(c.get_string("name"), params_of(c));
  const auto kmin = c.get_int("kmin"), kmax = c.get_int("kmax");
  if (kmin > kmax) throw ConfigError("kmin", "must not exceed kmax");
  ClassifyOptions opts;
  opts.c_min = c.get_double("c_min");
  opts.grid_points = static_cast<int>(c.get_int("grid_points"));
  CsvTable csv({"k", "alpha", "beta", "h1", "h2", "h3", "c_lower_1", "c_lower_2", "ratio_bound"});
  int mismatches = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (auto k = kmin; k <= kmax; ++k) {
    const DocumentedBand doc = documented_exponents(spec, static_cast<int>(k));
    const DyadicClassification cls = classify_band(spec, DyadicBand{static_cast<int>(k)}, doc.alpha, doc.beta, opts);
    csv.add_row({double(k), cls.alpha, cls.beta, double(cls.h1), double(cls.h2), double(cls.h3), cls.c_lower_1,
                 cls.c_lower_2, cls.ratio_bound});
    const bool match = cls.h1 == doc.h1 && cls.h2 == doc.h2 && cls.h3 == doc.h3;
    mismatches += match ? 0 : 1;
    rows.push_back({{"k", k}, {"match", match}});
  }
  rep.add_output("symbol_check.csv", csv.str());
  rep.add_check(upper("flag_mismatches", mismatches, 0, spec.name() + " against the catalog table"));
  rep.summary["bands"] = rows;
}

void run_strichartz(RunReport& rep) {
  const ExperimentConfig& c = rep.config;
  const auto kmin = c.get_int("kmin"), kmax = c.get_int("kmax");
  if (kmin > kmax) throw ConfigError("kmin", "must not exceed kmax");
  std::vector<int> ks;
  for (auto k = kmin; k <= kmax; ++k) ks.push_back(static_cast<int>(k));
  const auto qr = parse_qr_list(c.get_string("qr"));
  MeasureOptions opts;
  opts.n = checked_n(c);
  opts.nt = static_cast<std::size_t>(c.get_int("nt"));
  opts.nt_linear = std::min<std::size_t>(64, opts.nt / 2);
  opts.profile = parse_profile(c.get_string("profile"));
  const ScanResult res = scan(ks, qr, opts);

  constexpr double kRatioCeiling = 4.0;
  CsvTable csv({"k", "q", "r", "measured", "predicted", "ratio", "tail_flag"});
  double worst_ratio = 0;
  for (const ScanCell& cell : res.cells) {
    if (!cell.result) {
      rep.add_check({"cell k=" + std::to_string(cell.k) + " q=" + format_double(cell.q) + " r=" + format_double(cell.r),
                     false, NAN, 0, "<=", cell.error});
      continue;
    }
    const MixedNormResult& m = *cell.result;
    csv.add_row({double(m.k), m.q, m.r, m.measured, m.predicted, m.ratio, double(m.tail_flagged)});
    worst_ratio = std::max(worst_ratio, m.ratio);
  }
  rep.add_output("strichartz_scan.csv", csv.str());
  rep.add_check(upper("ratio_ceiling", worst_ratio, kRatioCeiling, "measured/predicted over all cells"));

  nlohmann::json slopes = nlohmann::json::array();
  for (const SlopeFit& f : res.fits) {
    const std::string tag = "(" + format_double(f.q) + "," + format_double(f.r) + ") k" + (f.nonnegative_k ? ">=0" : "<0");
    slopes.push_back({{"q", format_double(f.q)},
                      {"r", format_double(f.r)},
                      {"k_sign", f.nonnegative_k ? "nonnegative" : "negative"},
                      {"slope", f.fit.slope},
                      {"slope_stderr", f.fit.slope_stderr},
                      {"predicted", f.predicted_slope},
                      {"tolerance", f.tolerance},
                      {"ratio_spread", f.ratio_spread},
                      {"pass", f.pass}});
    rep.add_check(within("slope " + tag, f.fit.slope, f.predicted_slope, f.tolerance));
    rep.add_check(upper("ratio_spread " + tag, f.ratio_spread, 4.0));
  }
  Series s{PlotKind::slope, "strichartz_slopes", "k", "measured", false, true, {}};
  for (const auto& [q, r] : qr) {
    Curve curve;
    curve.label = "(q,r)=(" + format_double(q) + "," + format_double(r) + ")";
    for (const ScanCell& cell : res.cells) {
      if (cell.q == q && cell.r == r && cell.result) {
        curve.x.push_back(cell.k);
        curve.y.push_back(cell.result->measured);
      }
    }
    for (const SlopeFit& f : res.fits) {
      if (f.q == q && f.r == r && curve.fit_x.empty()) overlay_fit(curve, f.fit, false, slope_label(f.fit));
    }
    s.curves.push_back(std::move(curve));
  }
  rep.series.push_back(std::move(s));
  rep.summary["slopes"] = slopes;
  rep.summary["tolerances"] = {{"slope", 0.1}, {"slope_trivial", 0.01}, {"ratio_spread", 4.0}, {"ratio_ceiling", kRatioCeiling}};
  rep.summary["pass"] = rep.all_pass();
}

void run_kernel_decay(RunReport& rep) {
  const ExperimentConfig& c = rep.config;
  const SymbolSpec spec = catalog_lookup(c.get_string("symbol"), params_of(c));
  const int k = static_cast<int>(c.get_int("k"));
  const double tmin = c.get_double("tmin"), tmax = c.get_double("tmax");
  if (!(tmax > tmin)) throw ConfigError("tmax", "must exceed tmin");
  DecayScanOptions opts;
  if (!std::isnan(c.get_double("alpha"))) opts.alpha = c.get_double("alpha");
  const auto times = geometric_times(tmin, tmax, static_cast<int>(c.get_int("points")));
  const DecayScan scan = kernel_decay_scan(spec, k, times, opts);

  CsvTable csv({"t", "sup_abs_stationary", "sup_abs_far"});
  for (std::size_t i = 0; i < times.size(); ++i) csv.add_row({times[i], scan.stationary.sup_abs[i], scan.far.sup_abs[i]});
  const nlohmann::json fits = {
      {"alpha", scan.alpha},
      {"stationary_slope", scan.stationary.fit.slope},
      {"stationary_half_width", scan.stationary.fit.half_width()},
      {"stationary_points", scan.stationary.fit.points},
      {"far_slope", scan.far.fit.slope},
      {"far_half_width", scan.far.fit.half_width()},
      {"far_points", scan.far.fit.points},
  };
  rep.add_output("kernel_decay.csv", csv.str() + "\n" + fits.dump(2) + "\n");
  rep.summary["fits"] = fits;
  rep.add_check(within("stationary_slope", scan.stationary.fit.slope, -0.5, 0.15));
  rep.add_check(upper("far_slope", scan.far.fit.slope, -1.8));

  Series s{PlotKind::decay, "kernel_decay", "t", "sup |K|", true, true, {}};
  for (const auto* series : {&scan.stationary, &scan.far}) {
    Curve curve;
    curve.label = series == &scan.stationary ? "stationary window" : "far window";
    for (std::size_t i = 0; i < series->t.size(); ++i) {
      if (!series->usable[i]) continue;
      curve.x.push_back(series->t[i]);
      curve.y.push_back(series->sup_abs[i]);
    }
    overlay_fit(curve, series->fit, true, slope_label(series->fit));
    s.curves.push_back(std::move(curve));
  }
  rep.series.push_back(std::move(s));
}

void run_bessel(RunReport& rep) {
  const ExperimentConfig& c = rep.config;
  std::vector<double> nus;
  for (double nu : c.get_list("nu_list")) {
    if (nu < 0 || nu > 200) throw ConfigError("nu_list", "orders must lie in [0, 200]");
    if (nu <= c.get_double("numax")) nus.push_back(nu);
  }
  if (nus.empty()) throw ConfigError("nu_list", "no order at or below numax");
  const double rmin = c.get_double("rmin"), rmax = c.get_double("rmax");
  if (!(rmax > rmin)) throw ConfigError("rmax", "must exceed rmin");
  const auto grid = bessel_sweep_grid(nus, rmin, rmax, static_cast<int>(c.get_int("points")));
  const EnvelopeReport env = bessel_uniform_decay_check(nus, grid);

  CsvTable csv({"nu", "r", "j", "jprime", "envelope", "ratio"});
  for (const auto& row : env.rows) csv.add_row({row.nu, row.r, row.j, row.jprime, row.envelope, row.ratio});
  rep.add_output("bessel_envelope.csv", csv.str());

  double h_ratio = 0;
  std::size_t h_points = 0;
  CsvTable hcsv({"nu", "r", "j", "main", "h", "envelope", "ratio"});
  for (double nu : nus) {
    if (nu < 11) continue;
    for (double r : grid) {
      if (r <= nu + std::cbrt(nu)) continue;
      const AsymptoticDecomp d = bessel_asymptotic_decomp(nu, r);
      hcsv.add_row({nu, r, d.j, d.main, d.h, d.envelope, d.ratio});
      h_ratio = std::max(h_ratio, d.ratio);
      ++h_points;
    }
  }
  rep.add_output("bessel_remainder.csv", hcsv.str());

  double dual = 0;
  for (double nu : nus) {
    const double edge = std::max(10.0, 0.5 * nu);
    for (double f : {0.9, 1.0}) {
      const double r = edge * f;
      dual = std::max(dual, std::abs(bessel_j_series(nu, r) - bessel_j_schlafli(nu, r)));
    }
  }
  rep.add_check(upper("envelope_ratio", env.sup_ratio, c.get_double("envelope_bound")));
  rep.add_check(upper("tail_amplitude", env.tail_amplitude, 3.0, "max sqrt(r)|J| over r >= 2nu"));
  if (h_points > 0) rep.add_check(upper("remainder_ratio", h_ratio, c.get_double("remainder_bound")));
  rep.add_check(upper("dual_method", dual, 1e-9, "series vs Schlafli at the method boundary"));
  rep.summary["sup_ratio"] = env.sup_ratio;
  rep.summary["remainder_ratio"] = h_ratio;
  rep.summary["dual_method"] = dual;

  Series s{PlotKind::decay, "bessel_envelope_ratio", "r", "(|J|+|J'|)/envelope", true, true, {}};
  for (double nu : nus) {
    Curve curve;
    curve.label = "nu=" + format_double(nu);
    for (const auto& row : env.rows) {
      if (row.nu == nu) {
        curve.x.push_back(row.r);
        curve.y.push_back(row.ratio);
      }
    }
    s.curves.push_back(std::move(curve));
  }
  rep.series.push_back(std::move(s));
}

double v_norm(const GPState& s) {
  const RadialField v = s.u1.to_frequency() + apply(s.u2, Multiplier::U()) * cplx(0, 1);
  return v.l2_frequency();
}

void run_evolve(RunReport& rep) {
  const ExperimentConfig& c = rep.config;
  const RadialGrid grid(checked_n(c), c.get_double("rmax"));
  auto rng = rng_stream(c.seed, 0);
  const GPState init = random_state(grid, rng, c.get_double("delta"));
  const double dt = c.get_double("dt");
  const long steps = static_cast<long>(c.get_int("steps"));
  const Scheme scheme = c.get_string("scheme") == "strang" ? Scheme::strang : Scheme::rk4_full;
  const bool write_snaps = c.get_bool("write_snapshots");

  CsvTable csv({"t", "E", "e_kin", "e_pot", "l2_mass"});
  std::vector<double> ts, es;
  int index = 0;
  EvolveOptions opts;
  opts.snapshot_every = static_cast<int>(c.get_int("snapshot_every"));
  opts.nonlinear = c.get_bool("nonlinear");
  opts.keep_trajectory = false;
  opts.on_snapshot = [&](const GPState& s) {
    const EnergyReport e = energy(s);
    csv.add_row({s.t, e.e_total, e.e_kinetic, e.e_potential, e.l2_mass});
    ts.push_back(s.t);
    es.push_back(e.e_total);
    if (write_snaps) {
      char name[32];
      std::snprintf(name, sizeof name, "u_%05d.snap", index);
      const auto bytes = encode_snapshot(combine_components(s.u1, s.u2), s.t);
      rep.add_output(name, std::string(bytes.begin(), bytes.end()));
    }
    ++index;
  };
  evolve(init, dt, steps, scheme, opts);
  rep.add_output("energy.csv", csv.str());

  const double e0 = es.front();
  double drift = 0;
  Curve curve;
  curve.label = "|E(t) - E(0)| / |E(0)|";
  for (std::size_t i = 0; i < es.size(); ++i) {
    const double d = e0 != 0 ? std::abs(es[i] - e0) / std::abs(e0) : std::abs(es[i]);
    drift = std::max(drift, d);
    if (i > 0) {
      curve.x.push_back(ts[i]);
      curve.y.push_back(d);
    }
  }
  rep.add_check(upper("energy_drift", drift, c.get_double("drift_tol")));

  const double v0 = v_norm(init);
  const double v1 = v_norm(linear_propagator(init, dt * static_cast<double>(steps)));
  const double lin = v0 > 0 ? std::abs(v1 - v0) / v0 : std::abs(v1);
  rep.add_check(upper("linear_l2_conservation", lin, 1e-12, "relative change of |u1 + iUu2|_2"));
  rep.summary["energy_initial"] = e0;
  rep.summary["energy_drift"] = drift;

  Series s{PlotKind::energy, "energy_drift", "t", "relative drift", false, true, {}};
  s.curves.push_back(std::move(curve));
  Series e{PlotKind::energy, "energy", "t", "E", false, false, {}};
  e.curves.push_back({"E(t)", ts, es, {}, {}, {}});
  rep.series.push_back(std::move(s));
  rep.series.push_back(std::move(e));
}

void run_normal_form(RunReport& rep) {
  const ExperimentConfig& c = rep.config;
  const RadialGrid grid(checked_n(c), c.get_double("rmax"));
  const auto trials = static_cast<std::size_t>(c.get_int("trials"));
  const double delta = c.get_double("delta");
  std::vector<double> identity(trials), inverse(trials);
  std::vector<GPState> states;
  for (std::size_t i = 0; i < trials; ++i) {
    auto rng = rng_stream(c.seed, i);
    states.push_back(random_state(grid, rng, delta));
  }
  for_each_index(trials, Execution::parallel, [&](std::size_t i) {
    const GPState& s = states[i];
    const RadialField a = compute_N31(s, N31Form::defining);
    const RadialField b = compute_N31(s, N31Form::expanded);
    const double na = a.l2_physical();
    identity[i] = na > 0 ? (a - b).l2_physical() / na : (a - b).l2_physical();
    const GPState back = inverse_T(transform_T(s));
    GPState diff{s.t, back.u1 - s.u1, back.u2 - s.u2};
    inverse[i] = state_h1_norm(diff);
  });
  const double id_err = *std::max_element(identity.begin(), identity.end());
  const double inv_err = *std::max_element(inverse.begin(), inverse.end());
  rep.add_check(upper("n31_identity", id_err, c.get_double("identity_tol"), "max relative L2 error over trials"));
  rep.add_check(upper("inverse_T_roundtrip", inv_err, c.get_double("inverse_tol"), "max H1 error over trials"));

  const double h0 = c.get_double("h0");
  const int halvings = static_cast<int>(c.get_int("halvings"));
  auto residual_rng = rng_stream(c.seed, trials);
  const GPState probe = random_state(grid, residual_rng, c.get_double("residual_delta"));
  const RichardsonStudy frozen = richardson_study(probe, kFrozenSignConvention, h0, halvings);
  const double converged = frozen.samples.back().residual;
  nlohmann::json ratios = frozen.ratios;
  rep.add_check({"richardson_order", frozen.second_order,
                 frozen.ratios.empty() ? NAN : *std::min_element(frozen.ratios.begin(), frozen.ratios.end()), 0.5,
                 "within", "every ratio within 4 +/- 0.5"});

  nlohmann::json flips = nlohmann::json::array();
  const std::vector<std::pair<std::string, SignConvention>> flipped{
      {"s_n3", {+1, -1, +1, {1, 2}}},
      {"s_n4", {-1, +1, +1, {1, 2}}},
      {"s_n5", {-1, -1, -1, {1, 2}}},
      {"c_n5c", {-1, -1, +1, {1, 8}}},
  };
  for (const auto& [label, conv] : flipped) {
    const RichardsonStudy st = richardson_study(probe, conv, h0, halvings);
    const double plateau = st.samples.back().residual / converged;
    flips.push_back({{"flipped", label}, {"convention", conv.describe()}, {"plateau_ratio", plateau}});
    rep.add_check({"plateau " + label, plateau > 100.0, plateau, 100.0, ">=", conv.describe()});
  }

  const QuinticReport q = verify_quintic_cancellation(Rational(1), kFrozenSignConvention);
  rep.add_check({"quintic_sum", q.sum == Rational(0), to_double(q.sum), 0, "within", "exact rational arithmetic"});

  CsvTable csv({"trial", "identity_err", "inverse_err"});
  for (std::size_t i = 0; i < trials; ++i) csv.add_row({double(i), identity[i], inverse[i]});
  rep.add_output("normalform_trials.csv", csv.str());
  nlohmann::json out = {
      {"identity_err", id_err},
      {"inverse_err", inv_err},
      {"residual_orders", ratios},
      {"quintic_sum", std::to_string(q.sum.numerator()) + "/" + std::to_string(q.sum.denominator())},
      {"sign_convention", kFrozenSignConvention.describe()},
      {"flipped", flips},
  };
  rep.add_output("normalform.json", out.dump(2) + "\n");
  rep.summary = out;
}

void run_scatter(RunReport& rep) {
  const ExperimentConfig& c = rep.config;
  const RadialGrid grid(checked_n(c), c.get_double("rmax"));
  const double dt = c.get_double("dt");
  const double tmin = c.get_double("tmin"), tmax = c.get_double("tmax");
  const auto samples = c.get_int("samples");
  if (!(tmax > tmin)) throw ConfigError("tmax", "must exceed tmin");
  const double spacing = (tmax - tmin) / static_cast<double>(samples - 1);
  const auto every = std::llround(spacing / dt);
  const auto first = std::llround(tmin / dt);
  if (std::abs(every * dt - spacing) > 1e-9 * spacing || std::abs(first * dt - tmin) > 1e-9 * std::max(tmin, 1.0) ||
      first % every != 0) {
    throw ConfigError("dt", "sample times must fall on a common multiple of the snapshot stride");
  }
  auto rng = rng_stream(c.seed, 0);
  const GPState init = random_state(grid, rng, c.get_double("delta"));
  EvolveOptions opts;
  opts.snapshot_every = static_cast<int>(every);
  opts.nonlinear = c.get_bool("nonlinear");
  const auto traj = evolve(init, dt, first + every * (samples - 1), Scheme::strang, opts);
  std::vector<double> times;
  for (long long i = 0; i < samples; ++i) times.push_back((first + every * i) * dt);
  const ScatteringReport sr =
      scattering_profile(traj, times, opts.nonlinear ? ProfileTransform::normal_form : ProfileTransform::linear);

  CsvTable csv({"t", "cauchy", "cauchy_variant", "u1sq_h1"});
  for (std::size_t i = 0; i < times.size(); ++i) {
    csv.add_row({times[i], sr.primary.cauchy[i], sr.variant.cauchy[i], sr.u1sq_decay[i]});
  }
  rep.add_output("cauchy.csv", csv.str());

  bool monotone = true;
  for (std::size_t i = 1; i < sr.primary.cauchy.size(); ++i) monotone = monotone && sr.primary.cauchy[i] <= sr.primary.cauchy[i - 1];
  rep.add_check({"cauchy_monotone", monotone, double(monotone), 1, ">=", "indicator nonincreasing in the cutoff"});
  if (opts.nonlinear) {
    rep.add_check(upper("cauchy_window", sr.primary.cauchy.front(), c.get_double("cauchy_fraction") * sr.m0_h1,
                        "sup distance over the window vs fraction of |m(0)|_H1"));
  } else {
    rep.add_check(upper("free_profile_constant", sr.primary.cauchy.front(), 1e-12));
  }
  rep.add_check(upper("u1sq_decrease", sr.u1sq_decay.back() / sr.u1sq_decay.front(), 1.0,
                      "|(2-Lap)^-1 u1^2|_H1 at the end relative to the start"));
  rep.summary["m0_h1"] = sr.m0_h1;
  rep.summary["cauchy"] = sr.primary.cauchy;
  rep.summary["cauchy_variant"] = sr.variant.cauchy;

  Series s{PlotKind::cauchy, "cauchy_indicator", "t", "sup distance", false, true, {}};
  auto positive = [&](const std::vector<double>& y, const std::string& label) {
    Curve cv;
    cv.label = label;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] > 0) {
        cv.x.push_back(times[i]);
        cv.y.push_back(y[i]);
      }
    }
    return cv;
  };
  s.curves.push_back(positive(sr.primary.cauchy, "primary transform"));
  s.curves.push_back(positive(sr.variant.cauchy, "variant transform"));
  rep.series.push_back(std::move(s));
}

}  // namespace

std::size_t estimated_bytes(const ExperimentConfig& c) {
  constexpr std::size_t kPerNode = 16;  // one complex double
  switch (c.experiment()) {
    case Experiment::strichartz_scan:
      return static_cast<std::size_t>(c.get_int("n")) * kPerNode * 16;
    case Experiment::evolve:
      return static_cast<std::size_t>(c.get_int("n")) * kPerNode * 64;
    case Experiment::normalform_verify:
      return static_cast<std::size_t>(c.get_int("n")) * kPerNode * (2 * static_cast<std::size_t>(c.get_int("trials")) + 64);
    case Experiment::scatter:
      return static_cast<std::size_t>(c.get_int("n")) * kPerNode * (2 * static_cast<std::size_t>(c.get_int("samples")) + 64);
    default:
      return 0;
  }
}

RunReport run(const ExperimentConfig& config) {
  const std::size_t need = estimated_bytes(config);
  if (need > kMemoryLimit) {
    throw ConfigError("n", "grid needs about " + std::to_string(need >> 20) + " MiB, above the " +
                               std::to_string(kMemoryLimit >> 20) + " MiB limit");
  }
  RunReport rep(config);
  const auto start = std::chrono::steady_clock::now();
  switch (config.experiment()) {
    case Experiment::symbol_check: run_symbol_check(rep); break;
    case Experiment::strichartz_scan: run_strichartz(rep); break;
    case Experiment::kernel_decay: run_kernel_decay(rep); break;
    case Experiment::bessel_check: run_bessel(rep); break;
    case Experiment::evolve: run_evolve(rep); break;
    case Experiment::normalform_verify: run_normal_form(rep); break;
    case Experiment::scatter: run_scatter(rep); break;
  }
  std::vector<PlotKind> kinds;
  for (const Series& s : rep.series) {
    if (std::find(kinds.begin(), kinds.end(), s.kind) == kinds.end()) kinds.push_back(s.kind);
  }
  const std::filesystem::path root(config.output_dir);
  for (PlotKind k : kinds) {
    for (const auto& file : emit_plotdata(rep, k, root / "plots")) {
      const std::string bytes = read_file(file);
      rep.outputs.push_back({std::filesystem::relative(file, root).generic_string(), sha256_hex(bytes), bytes.size()});
    }
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

FieldSummary summarize_snapshot(const std::filesystem::path& path) {
  const Snapshot s = read_snapshot(path);
  FieldSummary out;
  out.n = s.field.size();
  out.r_max = s.field.grid().r_max();
  out.frequency = s.field.rep() == Rep::frequency;
  out.t = s.t;
  out.l2 = out.frequency ? s.field.l2_frequency() : s.field.l2_physical();
  for (cplx z : s.field.data()) out.max_abs = std::max(out.max_abs, std::abs(z));
  return out;
}

std::string dump_snapshot_csv(const std::filesystem::path& path) {
  const Snapshot s = read_snapshot(path);
  const bool freq = s.field.rep() == Rep::frequency;
  CsvTable csv({"j", freq ? "rho" : "r", "re", "im"});
  for (std::size_t j = 0; j < s.field.size(); ++j) {
    csv.add_row({double(j), freq ? s.field.grid().rho(j) : s.field.grid().r(j), s.field[j].real(), s.field[j].imag()});
  }
  return csv.str();
}

FieldDiff diff_snapshots(const std::filesystem::path& a, const std::filesystem::path& b) {
  const Snapshot sa = read_snapshot(a), sb = read_snapshot(b);
  check_same_grid(sa.field, sb.field);
  if (sa.field.rep() != sb.field.rep()) throw PreconditionError("field-diff: representations differ");
  const RadialField d = sa.field - sb.field;
  const bool freq = sa.field.rep() == Rep::frequency;
  FieldDiff out;
  for (cplx z : d.data()) out.max_abs = std::max(out.max_abs, std::abs(z));
  out.l2 = freq ? d.l2_frequency() : d.l2_physical();
  const double na = freq ? sa.field.l2_frequency() : sa.field.l2_physical();
  out.relative = na > 0 ? out.l2 / na : out.l2;
  out.dt = sb.t - sa.t;
  return out;
}

}  // namespace gplab
