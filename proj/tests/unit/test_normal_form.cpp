#include <doctest.h>

#include <cmath>
#include <vector>

#include "gplab/errors.hpp"
#include "gplab/fit.hpp"
#include "gplab/multiplier.hpp"
#include "gplab/norms.hpp"
#include "gplab/normal_form.hpp"
#include "gplab/random_fields.hpp"
#include "gplab/verify.hpp"

using namespace gplab;

namespace {

const RadialGrid& grid() {
  static const RadialGrid g(512, 60.0);
  return g;
}

GPState sample(std::uint64_t index, double h1) {
  auto rng = rng_stream(20240611, index);
  return random_state(grid(), rng, h1);
}

double rel(const RadialField& a, const RadialField& b) {
  return (a - b).l2_physical() / b.l2_physical();
}

double h1_diff(const GPState& a, const GPState& b) {
  return state_h1_norm(GPState{a.t, a.u1 - b.u1, a.u2 - b.u2});
}

}  // namespace

TEST_CASE("both closed forms of R agree") {
  for (std::uint64_t i = 0; i < 8; ++i) {
    const GPState s = sample(i, 0.05);
    CHECK(rel(compute_R_defining(s), compute_R(s)) <= 1e-10);
  }
}

TEST_CASE("zero state gives zero everywhere") {
  const GPState z = GPState::zero(grid());
  CHECK(compute_R(z).l2_physical() == 0.0);
  CHECK(compute_N31(z, N31Form::defining).l2_physical() == 0.0);
  CHECK(compute_N31(z, N31Form::expanded).l2_physical() == 0.0);
  const MState m0 = transform_T(z);
  CHECK(m0.m.l2_physical() == 0.0);
  for (int order = 2; order <= 5; ++order) CHECK(compute_nonlinearity(order, m0, z).l2_physical() == 0.0);
  const GPState back = inverse_T(m0);
  CHECK(state_h1_norm(back) == 0.0);
}

TEST_CASE("N31 defining and expanded forms agree on 50 random states") {
  double worst = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const GPState s = sample(i, 0.05);
    worst = std::max(worst, rel(compute_N31(s, N31Form::expanded), compute_N31(s, N31Form::defining)));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("N31 carries two derivatives on u2 at low bands") {
  const RadialGrid g(8192, 2.0e4);
  std::vector<double> ks, logs;
  double worst_c = 0;
  for (int k = -8; k <= -3; ++k) {
    const RadialField u2 = RadialField::from_spectrum(g, [k](double rho) { return cplx(lp_chi(k, rho), 0); })
                               .to_physical();
    const double amp = 0.05 / lebesgue_norm(u2, kInf);
    const GPState s{0, RadialField::zeros(g), u2 * amp};
    const double n = compute_N31(s, N31Form::expanded).l2_physical();
    const double sup = lebesgue_norm(s.u2, kInf);
    const double c = n / (std::pow(2.0, 2 * k) * sup * sup * s.u2.l2_physical());
    worst_c = std::max(worst_c, c);
    ks.push_back(k);
    logs.push_back(std::log2(n / (sup * sup * s.u2.l2_physical())));
  }
  const LineFit f = fit_line(ks, logs);
  CHECK(f.slope == doctest::Approx(2.0).epsilon(0.05));
  CHECK(worst_c <= 10.0);
}

TEST_CASE("N2 reduces to U(m1^2) when u2 vanishes") {
  const GPState full = sample(3, 0.05);
  const GPState s{0, full.u1, RadialField::zeros(grid())};
  const MState m = transform_T(s);
  const RadialField m1 = RadialField::from_real(grid(), Rep::physical, m.m.to_physical().real());
  const RadialField expect = apply(dealiased_product(m1, m1), Multiplier::U()).to_physical();
  const RadialField got = compute_nonlinearity(2, m, s);
  CHECK((got - expect).l2_physical() <= 1e-12 * std::max(1.0, expect.l2_physical()));
}

TEST_CASE("N_j scales with amplitude exponent j") {
  const GPState base = sample(7, 1.0);
  for (int order = 2; order <= 5; ++order) {
    std::vector<double> x, y;
    for (int e = -6; e <= -2; ++e) {
      const GPState s = base.scaled(std::ldexp(1.0, e));
      x.push_back(e);
      y.push_back(std::log2(compute_nonlinearity(order, transform_T(s), s).l2_physical()));
    }
    const LineFit f = fit_line(x, y);
    INFO("order " << order);
    CHECK(std::abs(f.slope - order) <= 0.05);
  }
}

TEST_CASE("transform_T with u2 = 0 restricts the formula") {
  const GPState full = sample(5, 0.05);
  const GPState s{0, full.u1, RadialField::zeros(grid())};
  const RadialField m = transform_T(s).m.to_physical();
  const RadialField sq = dealiased_product(s.u1, s.u1) * cplx(2, 0);
  const RadialField expect = s.u1 + apply(sq, Multiplier::inv_2mD()).to_physical();
  CHECK((m - expect).l2_physical() <= 1e-14);
  for (double im : m.imag()) CHECK(std::abs(im) <= 1e-15);
}

TEST_CASE("T moves u1 + iUu2 by at most half the quadratic part") {
  const GPState s = sample(9, 0.1);
  const RadialField lin =
      s.u1 + apply(s.u2, Multiplier::U()).to_physical() * cplx(0, 1);
  const RadialField m = transform_T(s).m.to_physical();
  const RadialField quad = dealiased_product(s.u1, s.u1) * cplx(2, 0) + dealiased_product(s.u2, s.u2);
  CHECK((m - lin).l2_physical() <= 0.5 * quad.l2_physical() + 1e-15);
}

TEST_CASE("inverse_T undoes T on the small ball") {
  double worst = 0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    const GPState s = sample(i, 0.05);
    worst = std::max(worst, h1_diff(inverse_T(transform_T(s)), s));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("inverse_T reports non-contraction for large data") {
  const GPState s = sample(11, 10.0);
  MState m = transform_T(s);
  m.m = m.m * cplx(4, 0);
  CHECK_THROWS_AS(inverse_T(m), NonContractionError);
}

TEST_CASE("m derivation residual") {
  const GPState z = GPState::zero(grid());
  CHECK(verify_m_derivation(z, kFrozenSignConvention, 1e-4).residual == 0.0);

  const RadialGrid g(1024, 100.0);
  auto rng = rng_stream(20240611, 50);
  const GPState probe = random_state(g, rng, 0.5);
  const RichardsonStudy good = richardson_study(probe, kFrozenSignConvention, 1e-4, 3);
  CHECK(good.second_order);
  for (double r : good.ratios) CHECK(r == doctest::Approx(4.0).epsilon(0.125));

  SignConvention flipped = kFrozenSignConvention;
  flipped.s_n3 = +1;
  const RichardsonStudy bad = richardson_study(probe, flipped, 1e-4, 3);
  CHECK_FALSE(bad.second_order);
  CHECK(bad.samples.back().residual > 100 * good.samples.back().residual);

  const ConventionSearch search = select_sign_convention(probe, 1e-4, 3);
  REQUIRE(search.selected >= 0);
  CHECK(search.conventions[static_cast<std::size_t>(search.selected)] == kFrozenSignConvention);
}

TEST_CASE("quintic cancellation") {
  const QuinticReport one = verify_quintic_cancellation(Rational(1));
  CHECK(one.sum == Rational(0));
  CHECK(one.n3_path == Rational(1, 2));
  CHECK(one.n5_path == Rational(-1, 2));
  const QuinticReport zero = verify_quintic_cancellation(Rational(0));
  CHECK(zero.sum == Rational(0));
  const QuinticReport half = verify_quintic_cancellation(Rational(1, 2));
  CHECK(half.n3_path == Rational(1, 64));
  CHECK(half.sum == Rational(0));
}
