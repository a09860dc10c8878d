#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gplab/errors.hpp"
#include "gplab/field.hpp"
#include "gplab/multiplier.hpp"
#include "gplab/norms.hpp"
#include "gplab/random_fields.hpp"
#include "gplab/snapshot.hpp"

using namespace gplab;

namespace {

constexpr double kPi = std::numbers::pi;

RadialField gaussian(const RadialGrid& g) {
  return RadialField::from_function(g, [](double r) { return cplx(std::exp(-0.5 * r * r), 0); });
}

double rel_l2(const RadialField& a, const RadialField& b) {
  return (a - b).l2_frequency() / b.l2_frequency();
}

// Independent radial L² oracle: composite Simpson on a fine grid of [0, R].
double simpson_l2(const std::function<double(double)>& f, double R, int n = 20000) {
  const double h = R / n;
  double s = 0;
  for (int i = 0; i <= n; ++i) {
    const double r = i * h;
    const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    s += w * f(r) * f(r) * r * r;
  }
  return std::sqrt(4 * kPi * s * h / 3);
}

}  // namespace

TEST_CASE("grid preconditions") {
  CHECK_THROWS_AS(RadialGrid(100, 10.0), PreconditionError);
  CHECK_THROWS_AS(RadialGrid(32, 10.0), PreconditionError);
  CHECK_THROWS_AS(RadialGrid(64, 0.0), PreconditionError);
  const RadialGrid g(64, 10.0);
  CHECK(g.rho(0) > 0);
  for (std::size_t j = 1; j < g.size(); ++j) {
    CHECK(g.r(j) > g.r(j - 1));
    CHECK(g.rho(j) > g.rho(j - 1));
  }
}

TEST_CASE("gaussian transform matches the closed form") {
  const RadialGrid g(1024, 30.0);
  const RadialField fh = gaussian(g).to_frequency();
  const RadialField exact = RadialField::from_spectrum(
      g, [](double rho) { return cplx(std::pow(2 * kPi, 1.5) * std::exp(-0.5 * rho * rho), 0); });
  CHECK(rel_l2(fh, exact) <= 1e-8);
  double max_imag = 0;
  for (cplx z : fh.data()) max_imag = std::max(max_imag, std::abs(z.imag()));
  CHECK(max_imag == 0.0);
}

TEST_CASE("zero field transforms to zero") {
  const RadialGrid g(128, 10.0);
  const RadialField z = RadialField::zeros(g).to_frequency();
  for (cplx v : z.data()) CHECK(v == cplx(0, 0));
}

TEST_CASE("round trip and Parseval") {
  const RadialGrid g(512, 40.0);
  auto rng = rng_stream(7, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const RadialField f = random_band_limited(g, rng) + gaussian(g) * cplx(0, 0.3);
    const RadialField back = f.to_frequency().to_physical();
    CHECK((back - f).l2_physical() / f.l2_physical() <= 1e-12);
    CHECK(std::abs(f.l2_physical() - f.to_frequency().l2_frequency()) / f.l2_physical() <= 1e-12);
  }
}

TEST_CASE("representation errors") {
  const RadialGrid g(64, 10.0);
  CHECK_THROWS_AS(forward_transform(RadialField::zeros(g, Rep::frequency)), PreconditionError);
  CHECK_THROWS_AS(inverse_transform(RadialField::zeros(g, Rep::physical)), PreconditionError);
  CHECK_THROWS(check_same_grid(RadialField::zeros(g), RadialField::zeros(RadialGrid(128, 10.0))));
}

TEST_CASE("gaussian L2 norm is pi^(3/4)") {
  const RadialGrid g(1024, 30.0);
  const double expected = std::pow(kPi, 0.75);
  CHECK(gaussian(g).l2_physical() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(simpson_l2([](double r) { return std::exp(-0.5 * r * r); }, 30.0) ==
        doctest::Approx(expected).epsilon(1e-10));
  CHECK(lebesgue_norm(gaussian(g), 2.0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("U then U_inv is the identity on P_0 f") {
  const RadialGrid g(1024, 60.0);
  const RadialField f = apply(gaussian(g), Multiplier::P(0));
  const RadialField back = apply(apply(f, Multiplier::U()), Multiplier::U_inv());
  CHECK(rel_l2(back, f) <= 1e-12);
}

TEST_CASE("1 - U is small on high bands") {
  const RadialGrid g(2048, 60.0);
  auto rng = rng_stream(3, 1);
  const RadialField base = RadialField::from_spectrum(g, [](double rho) { return cplx(1.0 / (1 + rho), 0); });
  for (int k = 3; k <= 5; ++k) {
    const RadialField pk = apply(base, Multiplier::P(k));
    const RadialField diff = pk - apply(pk, Multiplier::U());
    CHECK(diff.l2_frequency() / pk.l2_frequency() <= 2 * std::pow(2.0, -2 * k));
  }
}

TEST_CASE("Littlewood-Paley partition of unity") {
  const RadialGrid g(1024, 100.0);
  const double lo = 2 * g.rho(0), hi = g.rho(g.size() - 1) / 2;
  const RadialField f = RadialField::from_spectrum(g, [&](double rho) {
    if (rho < lo || rho > hi) return cplx(0, 0);
    return cplx(std::sin(rho) + 2, 0);
  });
  RadialField sum = RadialField::zeros(g, Rep::frequency);
  for (int k = -10; k <= 8; ++k) sum = sum + apply(f, Multiplier::P(k));
  CHECK(rel_l2(sum, f) <= 1e-10);
}

TEST_CASE("eta support properties") {
  for (double x = 0; x <= 1.25; x += 0.01) CHECK(lp_eta(x) == 1.0);
  for (double x = 1.6; x <= 3; x += 0.01) CHECK(lp_eta(x) == 0.0);
  for (double x = 1.26; x < 1.6; x += 0.01) {
    CHECK(lp_eta(x) > 0.0);
    CHECK(lp_eta(x) < 1.0);
    CHECK(lp_eta(x + 0.005) <= lp_eta(x));
  }
}

TEST_CASE("almost orthogonality of P_k") {
  const RadialGrid g(1024, 100.0);
  const RadialField f = RadialField::from_spectrum(g, [](double) { return cplx(1, 0); });
  for (int k = -3; k <= 3; ++k) {
    for (int kk = k + 2; kk <= 5; ++kk) {
      CHECK(apply(apply(f, Multiplier::P(k)), Multiplier::P(kk)).l2_frequency() == 0.0);
    }
  }
}

TEST_CASE("multipliers commute") {
  const RadialGrid g(256, 40.0);
  const RadialField f = gaussian(g);
  const std::vector<Multiplier> ms{Multiplier::U(), Multiplier::H(), Multiplier::inv_2mD(), Multiplier::P(1),
                                   Multiplier::D(), Multiplier::Hs_weight(1.0)};
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      const RadialField ab = apply(apply(f, a), b);
      const RadialField ba = apply(apply(f, b), a);
      CHECK((ab - ba).l2_frequency() <= 1e-14 * ab.l2_frequency() + 1e-300);
    }
  }
}

TEST_CASE("symbol ranges on the grid") {
  const RadialGrid g(1024, 50.0);
  const double rho_n = g.rho(g.size() - 1);
  for (double rho : g.frequencies()) {
    CHECK(symbol_U(rho) > 0);
    CHECK(symbol_U(rho) < 1);
    const double ratio = symbol_H(rho) / rho;
    CHECK(ratio >= std::sqrt(2.0));
    CHECK(ratio <= std::sqrt(2 + rho_n * rho_n) * (1 + 1e-15));
  }
}

TEST_CASE("U_inv flags low-frequency mass") {
  const RadialGrid g(512, 200.0);
  const RadialField wide = RadialField::from_function(g, [](double r) { return cplx(std::exp(-r * r / 800), 0); });
  const auto flagged = apply_multiplier(wide, Multiplier::U_inv());
  REQUIRE(flagged.low_frequency.has_value());
  CHECK(flagged.low_frequency->amplification == doctest::Approx(1.0 / symbol_U(g.rho(0))));
  const auto clean = apply_multiplier(apply(wide, Multiplier::P(2)), Multiplier::U_inv());
  CHECK_FALSE(clean.low_frequency.has_value());
}

TEST_CASE("norm examples") {
  const RadialGrid g(1024, 30.0);
  const RadialField f = gaussian(g);
  CHECK(norm(f, NormSpec::mixed(kInf, 2, 3.0)) == doctest::Approx(f.l2_physical()).epsilon(1e-14));
  std::vector<RadialField> traj(32, f);
  CHECK(mixed_spacetime_norm(traj, 2, 3, 4.0) == doctest::Approx(2 * lebesgue_norm(f, 3)).epsilon(1e-12));
  CHECK_THROWS_AS(mixed_spacetime_norm(std::vector<RadialField>(8, f), 2, 3, 1.0), PreconditionError);
  CHECK(sphere_mixed_norm(f, 2) == doctest::Approx(f.l2_physical()).epsilon(1e-12));
  CHECK(sphere_mixed_norm(f, kInf) == doctest::Approx(std::sqrt(4 * kPi) * std::exp(-0.5 * g.r(0) * g.r(0))));
  CHECK_THROWS_AS(NormSpec::lebesgue(0.5).validate(), PreconditionError);
}

TEST_CASE("tail flag") {
  const RadialGrid g(256, 10.0);
  CHECK_FALSE(norm_checked(gaussian(g), NormSpec::lebesgue(2)).tail_flagged);
  const RadialField slow = RadialField::from_function(g, [](double r) { return cplx(1.0 / (1 + r), 0); });
  CHECK(norm_checked(slow, NormSpec::lebesgue(2)).tail_flagged);
}

TEST_CASE("free evolution preserves band-limited L2 norms") {
  const RadialGrid g(1024, 80.0);
  const RadialField phi = apply(gaussian(g), Multiplier::P(1));
  double sup = 0;
  for (double t : {0.0, 0.5, 3.0, 10.0}) {
    const RadialField ev = apply_symbol(phi, [](double) { return 1.0; });
    std::vector<cplx> d(ev.data().begin(), ev.data().end());
    for (std::size_t m = 0; m < d.size(); ++m) d[m] *= std::polar(1.0, -t * symbol_H(g.rho(m)));
    sup = std::max(sup, RadialField(g, Rep::frequency, d).l2_frequency());
  }
  CHECK(std::abs(sup - phi.l2_frequency()) <= 1e-12 * phi.l2_frequency());
}

TEST_CASE("snapshot encode/decode round trip") {
  const RadialGrid g(64, 12.5);
  const RadialField f = gaussian(g) + gaussian(g) * cplx(0, -0.25);
  const Snapshot s = decode_snapshot(encode_snapshot(f, 1.75));
  CHECK(s.t == 1.75);
  CHECK(s.field.grid() == g);
  for (std::size_t j = 0; j < g.size(); ++j) CHECK(s.field[j] == f[j]);
  auto bytes = encode_snapshot(f, 0);
  CHECK(bytes.size() == 32 + 16 * 64);
  CHECK(bytes[0] == 64);  // little-endian n
  bytes.pop_back();
  CHECK_THROWS_AS(decode_snapshot(bytes), DomainError);
}
