#include "gplab/scattering.hpp"

#include <cmath>

#include "gplab/errors.hpp"
#include "gplab/evolve.hpp"
#include "gplab/kernels.hpp"
#include "gplab/normal_form.hpp"
#include "gplab/norms.hpp"
#include "spectral.hpp"

namespace gplab {

namespace {

RadialField profile_field(const GPState& s, ProfileTransform p) {
  switch (p) {
    case ProfileTransform::normal_form: return transform_T(s).m;
    case ProfileTransform::variant: return transform_T_variant(s).m;
    case ProfileTransform::linear: {
      const detail::Spectral sp(s.grid());
      const auto u2 = sp.apply(detail::Sym::U, s.u2.to_physical().real());
      const auto u1 = s.u1.to_physical().real();
      std::vector<cplx> d(u1.size());
      for (std::size_t j = 0; j < d.size(); ++j) d[j] = {u1[j], u2[j]};
      return RadialField(s.grid(), Rep::physical, std::move(d));
    }
  }
  throw PreconditionError("unknown profile transform");
}

// e^{itH} applied on the frequency side.
std::vector<cplx> pulled_back(const RadialField& m, double t) {
  const RadialField h = m.to_frequency();
  std::vector<cplx> d(h.data().begin(), h.data().end());
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double rho = m.grid().rho(k);
    d[k] *= std::polar(1.0, t * rho * std::sqrt(2.0 + rho * rho));
  }
  return d;
}

ProfileSeries series(std::span<const GPState* const> states, ProfileTransform p) {
  const std::size_t n = states.size();
  std::vector<std::vector<cplx>> s(n);
  for_each_index(n, Execution::parallel,
                 [&](std::size_t i) { s[i] = pulled_back(profile_field(*states[i], p), states[i]->t); });
  const RadialGrid& g = states[0]->grid();
  ProfileSeries out;
  out.transform = p;
  out.distances.assign(n, std::vector<double>(n, 0.0));
  for_each_index(n, Execution::parallel, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double acc = 0;
      for (std::size_t k = 0; k < g.size(); ++k) {
        const double rho = g.rho(k);
        acc += g.frequency_weight(k) * (1.0 + rho * rho) * std::norm(s[i][k] - s[j][k]);
      }
      out.distances[i][j] = std::sqrt(acc);
    }
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) out.distances[i][j] = out.distances[j][i];
  out.cauchy.assign(n, 0.0);
  double running = 0;
  for (std::size_t i0 = n; i0-- > 0;) {
    for (std::size_t j = i0; j < n; ++j) running = std::max(running, out.distances[i0][j]);
    out.cauchy[i0] = running;
  }
  return out;
}

}  // namespace

ScatteringReport scattering_profile(std::span<const GPState> trajectory, std::span<const double> times,
                                    ProfileTransform primary) {
  if (times.empty()) throw PreconditionError("scattering_profile: empty time list");
  std::vector<const GPState*> picked;
  for (double t : times) {
    const GPState* hit = nullptr;
    for (const auto& s : trajectory) {
      if (std::abs(s.t - t) <= 1e-9 * std::max(1.0, std::abs(t))) hit = &s;
    }
    if (!hit) throw PreconditionError("scattering_profile: no snapshot at t=" + std::to_string(t));
    picked.push_back(hit);
  }
  ScatteringReport r;
  r.times.assign(times.begin(), times.end());
  r.primary = series(picked, primary);
  r.variant = series(picked, ProfileTransform::variant);
  const detail::Spectral sp(picked[0]->grid());
  for (const GPState* s : picked) {
    const auto u1 = s->u1.to_physical().real();
    r.u1sq_decay.push_back(sp.h1(sp.apply(detail::Sym::A, sp.prod(u1, u1))));
  }
  r.m0_h1 = sobolev_norm(profile_field(trajectory.front(), primary), 1.0);
  return r;
}

}  // namespace gplab
