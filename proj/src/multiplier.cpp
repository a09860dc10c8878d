#include "gplab/multiplier.hpp"

#include <cmath>

#include "gplab/errors.hpp"

namespace gplab {

namespace {

double smooth_step_piece(double t) { return t > 0 ? std::exp(-1.0 / t) : 0.0; }

// C^∞ transition from 0 at t ≤ 0 to 1 at t ≥ 1.
double smooth_step(double t) {
  const double a = smooth_step_piece(t);
  const double b = smooth_step_piece(1.0 - t);
  return a / (a + b);
}

}  // namespace

double lp_eta(double x) {
  const double ax = std::abs(x);
  constexpr double lo = 5.0 / 4.0;
  constexpr double hi = 8.0 / 5.0;
  if (ax <= lo) return 1.0;
  if (ax >= hi) return 0.0;
  return 1.0 - smooth_step((ax - lo) / (hi - lo));
}

double lp_chi(int k, double rho) {
  return lp_eta(std::ldexp(rho, -k)) - lp_eta(std::ldexp(rho, 1 - k));
}

double lp_chi_le(int k, double rho) { return lp_eta(std::ldexp(rho, -k)); }

double symbol_U(double rho) { return rho / std::sqrt(2.0 + rho * rho); }
double symbol_H(double rho) { return rho * std::sqrt(2.0 + rho * rho); }

double Multiplier::symbol(double rho) const {
  switch (kind) {
    case MultiplierKind::U: return symbol_U(rho);
    case MultiplierKind::U_inv: return 1.0 / symbol_U(rho);
    case MultiplierKind::H: return symbol_H(rho);
    case MultiplierKind::inv_2mD: return 1.0 / (2.0 + rho * rho);
    case MultiplierKind::P_k: return lp_chi(k, rho);
    case MultiplierKind::P_le_k: return lp_chi_le(k, rho);
    case MultiplierKind::D:
    case MultiplierKind::grad_mag: return rho;
    case MultiplierKind::Hs_weight: return std::pow(1.0 + rho * rho, 0.5 * s);
  }
  throw DomainError("unknown multiplier");
}

std::string Multiplier::name() const {
  switch (kind) {
    case MultiplierKind::U: return "U";
    case MultiplierKind::U_inv: return "U_inv";
    case MultiplierKind::H: return "H";
    case MultiplierKind::inv_2mD: return "inv_2mD";
    case MultiplierKind::P_k: return "P_" + std::to_string(k);
    case MultiplierKind::P_le_k: return "P_le_" + std::to_string(k);
    case MultiplierKind::D: return "D";
    case MultiplierKind::grad_mag: return "grad_mag";
    case MultiplierKind::Hs_weight: return "Hs_weight(" + std::to_string(s) + ")";
  }
  return "unknown";
}

RadialField apply_symbol(const RadialField& f, const std::function<double(double)>& symbol) {
  const RadialField h = f.to_frequency();
  std::vector<cplx> d(h.data().begin(), h.data().end());
  for (std::size_t m = 0; m < d.size(); ++m) d[m] *= symbol(f.grid().rho(m));
  return RadialField(f.grid(), Rep::frequency, std::move(d));
}

MultiplierResult apply_multiplier(const RadialField& f, const Multiplier& m, double rho_cut) {
  if (!std::isfinite(m.s)) throw PreconditionError("multiplier order must be finite");
  RadialField out = apply_symbol(f, [&](double rho) { return m.symbol(rho); });
  std::optional<LowFrequencyFlag> flag;
  if (m.kind == MultiplierKind::U_inv) {
    const RadialField h = f.to_frequency();
    const RadialGrid& g = f.grid();
    double low = 0, total = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const double w = g.frequency_weight(i) * std::norm(h[i]);
      total += w;
      if (g.rho(i) < rho_cut) low += w;
    }
    if (total > 0 && low > 1e-3 * total) {
      flag = LowFrequencyFlag{low / total, 1.0 / symbol_U(g.rho(0))};
    }
  }
  return {std::move(out), flag};
}

RadialField apply(const RadialField& f, const Multiplier& m) {
  return apply_multiplier(f, m).field;
}

}  // namespace gplab
