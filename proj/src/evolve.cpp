#include "gplab/evolve.hpp"

#include <cmath>

#include "gplab/errors.hpp"
#include "gplab/kernels.hpp"
#include "spectral.hpp"

namespace gplab {

using detail::Spectral;
using detail::Sym;
using detail::Vec;

namespace {

// Linear flow on frequency coefficients (û₁, û₂), rotation by τH in the v variable.
void rotate(const Spectral& sp, Vec& f1, Vec& f2, double tau) {
  const Vec& H = sp.symbol(Sym::H);
  const Vec& U = sp.symbol(Sym::U);
  const Vec& Ui = sp.symbol(Sym::U_inv);
  for (std::size_t m = 0; m < f1.size(); ++m) {
    const double c = std::cos(tau * H[m]);
    const double s = std::sin(tau * H[m]);
    const double a = f1[m];
    const double b = f2[m];
    f1[m] = c * a + s * U[m] * b;
    f2[m] = -s * Ui[m] * a + c * b;
  }
}

void linear_step(const Spectral& sp, Vec& u1, Vec& u2, double tau) {
  Vec f1 = sp.fwd(u1);
  Vec f2 = sp.fwd(u2);
  rotate(sp, f1, f2, tau);
  u1 = sp.inv(f1);
  u2 = sp.inv(f2);
}

void full_rhs(const Spectral& sp, const Vec& u1, const Vec& u2, bool nonlinear, Vec& d1, Vec& d2) {
  // u̇₁ = −Δu₂ + N₁,  u̇₂ = −(2−Δ)u₁ − N₂ (pointwise part from the kernel).
  Vec f1 = sp.fwd(u1);
  Vec f2 = sp.fwd(u2);
  for (std::size_t m = 0; m < f1.size(); ++m) {
    const double rho2 = sp.grid().rho(m) * sp.grid().rho(m);
    const double a = f1[m];
    f1[m] = rho2 * f2[m];
    f2[m] = -(2.0 + rho2) * a;
  }
  d1 = sp.inv(f1);
  d2 = sp.inv(f2);
  if (!nonlinear) return;
  Vec n1(u1.size()), n2(u1.size());
  kernels::nonlinear_rhs(u1, u2, n1, n2);
  for (std::size_t j = 0; j < d1.size(); ++j) {
    d1[j] += n1[j];
    d2[j] += n2[j];
  }
}

void rk4_step(const Spectral& sp, Vec& u1, Vec& u2, double dt, bool nonlinear) {
  const std::size_t n = u1.size();
  Vec k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b;
  full_rhs(sp, u1, u2, nonlinear, k1a, k1b);
  full_rhs(sp, detail::add(u1, k1a, dt / 2), detail::add(u2, k1b, dt / 2), nonlinear, k2a, k2b);
  full_rhs(sp, detail::add(u1, k2a, dt / 2), detail::add(u2, k2b, dt / 2), nonlinear, k3a, k3b);
  full_rhs(sp, detail::add(u1, k3a, dt), detail::add(u2, k3b, dt), nonlinear, k4a, k4b);
  for (std::size_t j = 0; j < n; ++j) {
    u1[j] += dt / 6.0 * (k1a[j] + 2.0 * k2a[j] + 2.0 * k3a[j] + k4a[j]);
    u2[j] += dt / 6.0 * (k1b[j] + 2.0 * k2b[j] + 2.0 * k3b[j] + k4b[j]);
  }
}

void strang_step(const Spectral& sp, Vec& u1, Vec& u2, double dt, bool nonlinear) {
  if (nonlinear) kernels::nonlinear_substep(u1, u2, dt / 2);
  linear_step(sp, u1, u2, dt);
  if (nonlinear) kernels::nonlinear_substep(u1, u2, dt / 2);
}

double max_abs(const Vec& a, const Vec& b) {
  double m = 0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max({m, std::abs(a[j]), std::abs(b[j])});
  return m;
}

}  // namespace

GPState linear_propagator(const GPState& state, double tau) {
  if (!std::isfinite(tau)) throw PreconditionError("linear_propagator: tau must be finite");
  const Spectral sp(state.grid());
  Vec u1 = state.u1.to_physical().real();
  Vec u2 = state.u2.to_physical().real();
  linear_step(sp, u1, u2, tau);
  return GPState::from_real(state.grid(), u1, u2, state.t + tau);
}

std::vector<GPState> evolve(const GPState& state, double dt, long steps, Scheme scheme,
                            const EvolveOptions& opts) {
  if (!(dt != 0) || !std::isfinite(dt)) throw PreconditionError("evolve: dt must be finite and nonzero");
  if (steps < 0) throw PreconditionError("evolve: negative step count");
  if (opts.snapshot_every < 1) throw PreconditionError("evolve: snapshot_every must be >= 1");
  const RadialGrid& g = state.grid();
  const Spectral sp(g);
  Vec u1 = state.u1.to_physical().real();
  Vec u2 = state.u2.to_physical().real();
  std::vector<GPState> out;
  auto record = [&](long step) {
    GPState s = GPState::from_real(g, u1, u2, state.t + static_cast<double>(step) * dt);
    if (opts.on_snapshot) opts.on_snapshot(s);
    if (opts.keep_trajectory) out.push_back(std::move(s));
  };
  record(0);
  for (long step = 1; step <= steps; ++step) {
    if (scheme == Scheme::strang) {
      strang_step(sp, u1, u2, dt, opts.nonlinear);
    } else {
      rk4_step(sp, u1, u2, dt, opts.nonlinear);
    }
    const double m = max_abs(u1, u2);
    if (!(m <= 1e6)) throw BlowUpError("evolve: solution exceeded 1e6", step);
    if (step % opts.snapshot_every == 0 || step == steps) record(step);
  }
  return out;
}

EnergyReport energy(const GPState& state) {
  const RadialGrid& g = state.grid();
  const Spectral sp(g);
  const Vec u1 = state.u1.to_physical().real();
  const Vec u2 = state.u2.to_physical().real();
  const Vec f1 = sp.fwd(u1);
  const Vec f2 = sp.fwd(u2);
  EnergyReport e;
  for (std::size_t m = 0; m < f1.size(); ++m) {
    const double rho = g.rho(m);
    e.e_kinetic += g.frequency_weight(m) * rho * rho * (f1[m] * f1[m] + f2[m] * f2[m]);
  }
  double mass = 0;
  for (std::size_t j = 0; j < u1.size(); ++j) {
    const double p = u1[j] * u1[j] + u2[j] * u2[j] + 2.0 * u1[j];
    e.e_potential += g.physical_weight(j) * 0.5 * p * p;
    mass += g.physical_weight(j) * (u1[j] * u1[j] + u2[j] * u2[j]);
  }
  e.l2_mass = std::sqrt(mass);
  e.e_total = e.e_kinetic + e.e_potential;
  return e;
}

double potential_energy_expanded(const GPState& state) {
  const RadialGrid& g = state.grid();
  const Vec u1 = state.u1.to_physical().real();
  const Vec u2 = state.u2.to_physical().real();
  double s = 0;
  for (std::size_t j = 0; j < u1.size(); ++j) {
    const double a = u1[j], b = u2[j];
    const double a2 = a * a, b2 = b * b;
    // ((a²+b²) + 2a)²/2 = 2a² + 2a(a²+b²) + (a²+b²)²/2
    const double dens = 2.0 * a2 + 2.0 * a * a2 + 2.0 * a * b2 + 0.5 * (a2 * a2 + 2.0 * a2 * b2 + b2 * b2);
    s += g.physical_weight(j) * dens;
  }
  return s;
}

}  // namespace gplab
