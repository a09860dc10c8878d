#include "gplab/normal_form.hpp"

#include <cmath>

#include "gplab/errors.hpp"
#include "gplab/multiplier.hpp"
#include "nf_detail.hpp"

namespace gplab {

namespace detail {

Vec R_spectral(const Spectral& sp, const Vec& u1, const Vec& u2) {
  // R̂ = [ρ² F(u₂²) − (2−ρ²) F(u₁²)] / (2(2+ρ²)).
  const Vec a = sp.fwd(sp.prod(u2, u2));
  const Vec b = sp.fwd(sp.prod(u1, u1));
  Vec r(sp.size());
  for (std::size_t m = 0; m < r.size(); ++m) {
    const double rho = sp.grid().rho(m);
    r[m] = (rho * rho * a[m] - (2.0 - rho * rho) * b[m]) / (2.0 * (2.0 + rho * rho));
  }
  return sp.inv(r);
}

Vec z1_of(const Spectral& sp, const Vec& u1, const Vec& u2) {
  const Vec q = add(scale(sp.prod(u1, u1), 2.0), sp.prod(u2, u2));
  return add(u1, sp.apply(Sym::A, q));
}

Vec N31_defining(const Spectral& sp, const Vec& u1, const Vec& u2) {
  const Vec R = R_spectral(sp, u1, u2);
  const Vec q = sp.apply(Sym::A, add(scale(sp.prod(u1, u1), 2.0), sp.prod(u2, u2)));
  const Vec lap_u2 = sp.apply(Sym::lap, u2);
  const Vec inner = sp.apply(Sym::A, sp.prod(q, lap_u2));
  return scale(add(sp.prod(R, u2), inner, 2.0), 2.0);
}

Vec N31_expanded(const Spectral& sp, const Vec& u1, const Vec& u2) {
  const Vec du2 = sp.dr(u2);
  const Vec lap_u2 = sp.apply(Sym::lap, u2);
  const Vec u2sq = sp.prod(u2, u2);
  const Vec u1sq = sp.prod(u1, u1);
  const Vec lapA_u2sq = sp.apply(Sym::lap_A, u2sq);  // Δu₂²/(2−Δ)
  const Vec grad_lapA = sp.dr(lapA_u2sq);
  Vec bracket = scale(sp.prod(u2, sp.prod(du2, du2)), -2.0);
  bracket = add(bracket, sp.prod(lapA_u2sq, lap_u2), 3.0);
  bracket = add(bracket, sp.prod(grad_lapA, du2), 2.0);
  Vec out = sp.apply(Sym::A, bracket);
  const Vec two_u1sq_A = sp.apply(Sym::A, scale(u1sq, 2.0));
  out = add(out, sp.apply(Sym::A, sp.prod(two_u1sq_A, lap_u2)), 4.0);
  out = add(out, sp.prod(sp.apply(Sym::two_plus_A, u1sq), u2), -1.0);
  return out;
}

NonlinearParts nonlinearity(int order, const Spectral& sp, const Vec& m1, const Vec& u1,
                            const Vec& u2, const SignConvention& conv) {
  const std::size_t n = sp.size();
  NonlinearParts out{Vec(n, 0.0), Vec(n, 0.0)};
  auto two_A = [&](const Vec& v) { return scale(sp.apply(Sym::A, v), 2.0); };
  switch (order) {
    case 2: {
      out.re = sp.apply(Sym::U, sp.prod(m1, m1));
      const Vec t1 = scale(sp.prod(m1, sp.apply(Sym::lap, u2)), -3.0);
      const Vec t2 = scale(sp.prod(sp.dr(m1), sp.dr(u2)), -2.0);
      out.im = two_A(add(t1, t2));
      break;
    }
    case 3: {
      const Vec R = R_spectral(sp, u1, u2);
      out.re = sp.apply(Sym::U, scale(sp.prod(m1, R), 2.0));
      const Vec m1u2 = sp.prod(m1, u2);
      Vec b = scale(sp.prod(u1, m1u2), 4.0);
      b = add(b, sp.prod(m1, m1u2), conv.s_n3);
      out.im = add(N31_defining(sp, u1, u2), two_A(b));
      break;
    }
    case 4: {
      const Vec R = R_spectral(sp, u1, u2);
      const Vec mod2 = add(sp.prod(u1, u1), sp.prod(u2, u2));
      out.re = sp.apply(Sym::U, add(sp.prod(R, R), sp.prod(mod2, mod2), -0.25));
      const Vec Ru2 = sp.prod(R, u2);
      Vec b = scale(sp.prod(u1, Ru2), 4.0);
      b = add(b, sp.prod(m1, Ru2), 2.0 * conv.s_n4);
      out.im = two_A(b);
      break;
    }
    case 5: {
      const Vec R = R_spectral(sp, u1, u2);
      const Vec mod2 = add(sp.prod(u1, u1), sp.prod(u2, u2));
      const Vec a = scale(two_A(sp.prod(u2, sp.prod(R, R))), -1.0);
      const Vec c = scale(sp.apply(Sym::A, sp.prod(u2, sp.prod(mod2, mod2))), conv.c_n5c_value());
      out.im = scale(add(a, c), conv.s_n5);
      break;
    }
    default:
      throw PreconditionError("nonlinearity order must be 2, 3, 4 or 5");
  }
  return out;
}

NonlinearParts total(const Spectral& sp, const Vec& m1, const Vec& u1, const Vec& u2,
                     const SignConvention& conv) {
  NonlinearParts acc{Vec(sp.size(), 0.0), Vec(sp.size(), 0.0)};
  for (int order = 2; order <= 5; ++order) {
    const NonlinearParts p = nonlinearity(order, sp, m1, u1, u2, conv);
    acc.re = add(acc.re, p.re);
    acc.im = add(acc.im, p.im);
  }
  return acc;
}

RadialField to_field(const RadialGrid& g, const Vec& re) {
  return RadialField::from_real(g, Rep::physical, re);
}

RadialField to_field(const RadialGrid& g, const Vec& re, const Vec& im) {
  std::vector<cplx> d(re.size());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = {re[j], im[j]};
  return RadialField(g, Rep::physical, std::move(d));
}

}  // namespace detail

using detail::Spectral;
using detail::Sym;
using detail::Vec;

RadialField compute_R(const GPState& state) {
  const Spectral sp(state.grid());
  return detail::to_field(state.grid(),
                          detail::R_spectral(sp, state.u1.to_physical().real(), state.u2.to_physical().real()));
}

RadialField compute_R_defining(const GPState& state) {
  const Spectral sp(state.grid());
  const Vec u1 = state.u1.to_physical().real();
  const Vec u2 = state.u2.to_physical().real();
  const Vec mod2 = detail::add(sp.prod(u1, u1), sp.prod(u2, u2));
  const Vec r = detail::add(detail::add(u1, mod2, 0.5), detail::z1_of(sp, u1, u2), -1.0);
  return detail::to_field(state.grid(), r);
}

RadialField compute_N31(const GPState& state, N31Form form) {
  const Spectral sp(state.grid());
  const Vec u1 = state.u1.to_physical().real();
  const Vec u2 = state.u2.to_physical().real();
  return detail::to_field(state.grid(), form == N31Form::defining ? detail::N31_defining(sp, u1, u2)
                                                                  : detail::N31_expanded(sp, u1, u2));
}

RadialField compute_nonlinearity(int order, const MState& m, const GPState& u,
                                 const SignConvention& conv) {
  check_same_grid(m.m, u.u1);
  check_same_grid(u.u1, u.u2);
  const Spectral sp(u.grid());
  const auto p = detail::nonlinearity(order, sp, m.m.to_physical().real(), u.u1.to_physical().real(),
                                      u.u2.to_physical().real(), conv);
  return detail::to_field(u.grid(), p.re, p.im);
}

RadialField total_nonlinearity(const MState& m, const GPState& u, const SignConvention& conv) {
  check_same_grid(m.m, u.u1);
  const Spectral sp(u.grid());
  const auto p = detail::total(sp, m.m.to_physical().real(), u.u1.to_physical().real(),
                               u.u2.to_physical().real(), conv);
  return detail::to_field(u.grid(), p.re, p.im);
}

MState transform_T(const GPState& state) {
  const Spectral sp(state.grid());
  const Vec u1 = state.u1.to_physical().real();
  const Vec u2 = state.u2.to_physical().real();
  return {state.t, detail::to_field(state.grid(), detail::z1_of(sp, u1, u2), sp.apply(Sym::U, u2))};
}

MState transform_T_variant(const GPState& state) {
  const Spectral sp(state.grid());
  const Vec u1 = state.u1.to_physical().real();
  const Vec u2 = state.u2.to_physical().real();
  const Vec re = detail::add(u1, sp.apply(Sym::A, sp.prod(u2, u2)));
  return {state.t, detail::to_field(state.grid(), re, sp.apply(Sym::U, u2))};
}

GPState inverse_T(const MState& m, InverseTOptions opts) {
  const RadialGrid& g = m.m.grid();
  const Spectral sp(g);
  const RadialField m2 = RadialField::from_real(g, Rep::physical, m.m.to_physical().imag());
  const MultiplierResult u2r = apply_multiplier(m2, Multiplier::U_inv());
  if (u2r.low_frequency && !opts.accept_low_frequency) {
    throw PreconditionError("inverse_T: U^-1 m2 flagged for low-frequency amplification");
  }
  const Vec u2 = u2r.field.to_physical().real();
  const Vec m1 = m.m.to_physical().real();
  const Vec u2sq = sp.prod(u2, u2);
  Vec u1 = m1;
  double last = INFINITY;
  int growth = 0;
  for (int it = 1; it <= opts.max_iter; ++it) {
    const Vec q = detail::add(detail::scale(sp.prod(u1, u1), 2.0), u2sq);
    const Vec next = detail::add(m1, sp.apply(Sym::A, q), -1.0);
    const double diff = sp.h1(detail::add(next, u1, -1.0));
    u1 = next;
    if (!std::isfinite(diff) || diff > 1e6) {
      throw NonContractionError("inverse_T: iterates diverge", it);
    }
    if (diff <= opts.tol) return GPState::from_real(g, u1, u2, m.t);
    growth = diff >= last ? growth + 1 : 0;
    if (growth >= 3) throw NonContractionError("inverse_T: increments stopped contracting", it);
    last = diff;
  }
  throw NonContractionError("inverse_T: max_iter reached", opts.max_iter);
}

}  // namespace gplab
