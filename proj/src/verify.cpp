#include "gplab/verify.hpp"

#include <cmath>

#include "gplab/errors.hpp"
#include "gplab/evolve.hpp"
#include "gplab/normal_form.hpp"
#include "nf_detail.hpp"

namespace gplab {

using detail::Spectral;
using detail::Sym;
using detail::Vec;

MResidual verify_m_derivation(const GPState& state, const SignConvention& conv, double h) {
  if (!(h > 0)) throw PreconditionError("verify_m_derivation: h must be positive");
  const Spectral sp(state.grid());
  const GPState plus = evolve(state, h, 1, Scheme::rk4_full).back();
  const GPState minus = evolve(state, -h, 1, Scheme::rk4_full).back();
  const RadialField m0 = transform_T(state).m;
  const RadialField mp = transform_T(plus).m;
  const RadialField mm = transform_T(minus).m;
  const Vec m1 = m0.real(), m2 = m0.imag();
  const Vec dm1 = detail::scale(detail::add(mp.real(), mm.real(), -1.0), 0.5 / h);
  const Vec dm2 = detail::scale(detail::add(mp.imag(), mm.imag(), -1.0), 0.5 / h);
  const auto N = detail::total(sp, m1, state.u1.to_physical().real(), state.u2.to_physical().real(), conv);
  // i∂ₜm − Hm − N, split into real and imaginary parts.
  const Vec res_re = detail::add(detail::add(detail::scale(dm2, -1.0), sp.apply(Sym::H, m1), -1.0), N.re, -1.0);
  const Vec res_im = detail::add(detail::add(dm1, sp.apply(Sym::H, m2), -1.0), N.im, -1.0);
  MResidual out;
  out.h = h;
  out.residual = std::hypot(sp.l2(res_re), sp.l2(res_im));
  const double scale = std::hypot(sp.l2(dm1), sp.l2(dm2));
  out.relative = scale > 0 ? out.residual / scale : 0.0;
  return out;
}

RichardsonStudy richardson_study(const GPState& state, const SignConvention& conv, double h0,
                                 int halvings) {
  RichardsonStudy s;
  double h = h0;
  for (int i = 0; i <= halvings; ++i, h *= 0.5) s.samples.push_back(verify_m_derivation(state, conv, h));
  s.second_order = true;
  for (std::size_t i = 0; i + 1 < s.samples.size(); ++i) {
    const double r = s.samples[i].residual / s.samples[i + 1].residual;
    s.ratios.push_back(r);
    if (!(std::abs(r - 4.0) <= 0.5)) s.second_order = false;
  }
  return s;
}

std::vector<SignConvention> candidate_conventions() {
  std::vector<SignConvention> out;
  for (int s3 : {-1, 1})
    for (int s4 : {-1, 1})
      for (int s5 : {-1, 1})
        for (Rational c : {Rational(1, 2), Rational(1, 8)}) out.push_back({s3, s4, s5, c});
  return out;
}

ConventionSearch select_sign_convention(const GPState& state, double h0, int halvings) {
  ConventionSearch out;
  out.conventions = candidate_conventions();
  int hits = 0;
  for (std::size_t i = 0; i < out.conventions.size(); ++i) {
    out.studies.push_back(richardson_study(state, out.conventions[i], h0, halvings));
    if (out.studies.back().second_order) {
      ++hits;
      out.selected = static_cast<int>(i);
    }
  }
  if (hits != 1) out.selected = -1;
  return out;
}

QuinticReport verify_quintic_cancellation(Rational c, const SignConvention& conv) {
  // Zero-frequency substitution: 2−Δ → 2, 2+Δ → 2. With m₁ = 0 the transform
  // gives u₁ = −u₂²/(2−Δ) to leading order, and ü₂ = (2−Δ)(Δu₂ − Im N).
  const Rational two_minus(2), two_plus(2);
  const Rational c2 = c * c;
  const Rational c5 = c2 * c2 * c;
  const Rational u1 = -c2 / two_minus;
  // Cubic part −u₂((2+Δ)/(2−Δ))u₁² of N₃¹.
  const Rational n3c = -c * (two_plus / two_minus) * u1 * u1;
  // Critical quintic of N₅ with |u|⁴ → u₂⁴.
  const Rational n5c = Rational(conv.s_n5) * conv.c_n5c * c5 / two_minus;
  QuinticReport r;
  r.n3_path = -two_minus * n3c;
  r.n5_path = -two_minus * n5c;
  r.sum = r.n3_path + r.n5_path;
  return r;
}

}  // namespace gplab
