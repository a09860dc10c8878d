#include <doctest.h>

#include <cmath>
#include <complex>

#include "gplab/errors.hpp"
#include "gplab/oscint.hpp"

using namespace gplab;

namespace {

using cd = std::complex<double>;

const Amplitude kOne{[](double) { return 1.0; }, [](double) { return 0.0; }};

Phase linear_phase() {
  return {[](double x) { return x; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
}

Phase quadratic_phase() {
  return {[](double x) { return x * x; }, [](double x) { return 2 * x; }, [](double) { return 2.0; }};
}

// Dense composite Simpson on [a, b].
cd brute_force(const std::function<double(double)>& psi, double a, double b, int n = 2'000'000) {
  const double h = (b - a) / n;
  cd s = 0;
  for (int i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    s += w * std::polar(1.0, psi(a + i * h));
  }
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("zero phase integrates the amplitude") {
  const Phase zero{[](double) { return 0.0; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
  const cd v = oscillatory_integral(zero, kOne, 0, 1, 1e-12);
  CHECK(std::abs(v - cd(1, 0)) <= 1e-12);
}

TEST_CASE("fresnel integral at lambda 100") {
  const Phase p = quadratic_phase().scaled(100.0);
  const cd v = oscillatory_integral(p, kOne, 0, 1, 1e-10);
  const cd ref = brute_force([](double x) { return 100 * x * x; }, 0, 1);
  CHECK(std::abs(v - ref) <= 1e-8);
}

TEST_CASE("linear phase matches the closed form") {
  for (double lambda : {1.0, 37.0, 1000.0}) {
    const cd v = oscillatory_integral(linear_phase().scaled(lambda), kOne, 0, 2, 1e-11);
    const cd exact = (std::polar(1.0, 2 * lambda) - 1.0) / cd(0, lambda);
    CHECK(std::abs(v - exact) <= 1e-10);
  }
}

TEST_CASE("conjugation symmetry") {
  const Amplitude amp{[](double x) { return std::exp(-x * x); }, {}};
  const Phase p = quadratic_phase().scaled(40.0);
  const cd plus = oscillatory_integral(p, amp, -2, 3, 1e-11);
  const cd minus = oscillatory_integral(p.negated(), amp, -2, 3, 1e-11);
  CHECK(std::abs(minus - std::conj(plus)) <= 1e-10);
}

TEST_CASE("halving tol changes the result by less than tol") {
  const Amplitude amp{[](double x) { return 1 / (1 + x * x); }, {}};
  const Phase p{[](double x) { return 50 * std::sin(x) + 3 * x * x; },
                [](double x) { return 50 * std::cos(x) + 6 * x; },
                [](double x) { return -50 * std::sin(x) + 6; }};
  for (double tol : {1e-6, 1e-8, 1e-10}) {
    const cd a = oscillatory_integral(p, amp, -4, 4, tol);
    const cd b = oscillatory_integral(p, amp, -4, 4, tol / 2);
    CHECK(std::abs(a - b) <= tol);
  }
}

TEST_CASE("stationary points are located") {
  const Phase p{[](double x) { return std::cos(x); }, [](double x) { return -std::sin(x); },
                [](double x) { return -std::cos(x); }};
  const auto roots = stationary_points(p, 1, 10);
  REQUIRE(roots.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(roots[i] == doctest::Approx((i + 1) * M_PI).epsilon(1e-12));
}

TEST_CASE("tol below 1e-12 is rejected") {
  CHECK_THROWS_AS(oscillatory_integral(linear_phase(), kOne, 0, 1, 1e-13), PreconditionError);
}

TEST_CASE("van der Corput linear phase") {
  for (double lambda : {10.0, 100.0, 1e3, 1e4}) {
    const VdcReport r = vdc_check(linear_phase(), kOne, 0, 1, 1, lambda);
    CHECK(r.integral_abs == doctest::Approx(std::abs(std::polar(1.0, lambda) - 1.0) / lambda).epsilon(1e-9));
    CHECK(r.ratio <= 2.0);
  }
}

TEST_CASE("van der Corput quadratic phase stays bounded") {
  double worst = 0;
  for (double lambda : {10.0, 100.0, 1e3, 1e4}) {
    worst = std::max(worst, vdc_check(quadratic_phase(), kOne, -1, 1, 2, lambda).ratio);
  }
  CHECK(worst <= 8.0);
}

TEST_CASE("van der Corput rejects a degenerate phase") {
  const Phase cubic{[](double x) { return x * x * x; }, [](double x) { return 3 * x * x; },
                    [](double x) { return 6 * x; }};
  CHECK_THROWS_AS(vdc_check(cubic, kOne, -1, 1, 2, 100.0), PreconditionError);
  const Phase wiggle{[](double x) { return x + 0.1 * std::sin(20 * x); },
                     [](double x) { return 1 + 2 * std::cos(20 * x); },
                     [](double x) { return -40 * std::sin(20 * x); }};
  CHECK_THROWS_AS(vdc_check(wiggle, kOne, 0, 1, 1, 100.0), PreconditionError);
}
