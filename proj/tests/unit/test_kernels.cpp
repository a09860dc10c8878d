#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gplab/errors.hpp"
#include "gplab/fit.hpp"
#include "gplab/kernel_k.hpp"
#include "gplab/kernels.hpp"
#include "gplab/multiplier.hpp"
#include "gplab/symbol.hpp"

using namespace gplab;

namespace {

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("kernel at the origin is the integral of the squared cutoff") {
  const SymbolSpec gp = catalog_lookup("gp");
  const int n = 200000;
  const double h = (kChi0Upper - kChi0Lower) / n;
  double s = 0;
  for (int i = 0; i <= n; ++i) {
    const double c = lp_chi(0, kChi0Lower + i * h);
    s += (i == 0 || i == n ? 0.5 : 1.0) * c * c;
  }
  s *= h;
  const std::complex<double> k0 = kernel_K(gp, 2, 0, 0);
  CHECK(k0.real() > 0);
  CHECK(std::abs(k0.imag()) <= 1e-12);
  CHECK(k0.real() == doctest::Approx(s).epsilon(1e-8));
}

TEST_CASE("kernel conjugation symmetry") {
  const SymbolSpec gp = catalog_lookup("gp");
  for (double t : {3.0, 40.0}) {
    for (double x : {-25.0, 0.0, 7.5}) {
      const auto a = kernel_K(gp, 1, t, x);
      const auto b = kernel_K(gp, 1, -t, -x);
      CHECK(std::abs(b - std::conj(a)) <= 1e-9);
    }
  }
}

TEST_CASE("schrodinger stationary decay has slope -1/2") {
  const SymbolSpec s = catalog_lookup("schrodinger", {2});
  const DecayScan scan = kernel_decay_scan(s, 0, geometric_times(10, 1000, 12));
  CHECK(scan.stationary.fit.slope == doctest::Approx(-0.5).epsilon(0.1));
}

TEST_CASE("gp band 2 obeys the stationary bound") {
  const SymbolSpec gp = catalog_lookup("gp");
  const int k = 2;
  const double beta = 2;
  const auto ts = geometric_times(10, 1000, 10);
  double lo = INFINITY, hi = 0;
  for (double t : ts) {
    const KernelSample ks = kernel_sample(gp, k, t, stationary_window(gp, k, t));
    const double p = ks.sup_abs * std::sqrt(t) * std::pow(2.0, k * beta / 2);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  CHECK(hi <= 10.0);
  CHECK(hi / lo <= 2.0);
}

TEST_CASE("decay scan preconditions") {
  const SymbolSpec gp = catalog_lookup("gp");
  CHECK_THROWS_AS(kernel_decay_scan(gp, 2, geometric_times(10, 100, 5)), PreconditionError);
  const std::vector<double> uneven{10, 11, 20, 40, 80, 160, 320, 640};
  CHECK_THROWS_AS(kernel_decay_scan(gp, 2, uneven), PreconditionError);
  const std::vector<double> one{1.0};
  CHECK_THROWS_AS(fit_line(one, one), FitDegenerate);
  const std::vector<double> flat_x{2, 2, 2}, y{1, 2, 3};
  CHECK_THROWS_AS(fit_line(flat_x, y), FitDegenerate);
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd(0, 0.3);
  const std::size_t n = 10007;
  std::vector<double> u1(n), u2(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    u1[i] = nd(rng);
    u2[i] = nd(rng);
    w[i] = std::abs(nd(rng));
  }
  auto a1 = u1, a2 = u2, b1 = u1, b2 = u2;
  kernels::nonlinear_substep(a1, a2, 1e-2);
  kernels::serial::nonlinear_substep(b1, b2, 1e-2);
  CHECK(max_diff(a1, b1) <= 1e-15);
  CHECK(max_diff(a2, b2) <= 1e-15);

  std::vector<double> d1(n), d2(n), e1(n), e2(n);
  kernels::nonlinear_rhs(u1, u2, d1, d2);
  kernels::serial::nonlinear_rhs(u1, u2, e1, e2);
  CHECK(max_diff(d1, e1) <= 1e-15);
  CHECK(max_diff(d2, e2) <= 1e-15);

  for (double p : {1.0, 2.0, 5.0}) {
    const double par = kernels::weighted_power_sum(w, u1, p);
    CHECK(par == doctest::Approx(kernels::serial::weighted_power_sum(w, u1, p)).epsilon(1e-13));
    CHECK(par == kernels::weighted_power_sum(w, u1, p));
  }
}

TEST_CASE("substep fixes the zero state") {
  std::vector<double> u1(64, 0.0), u2(64, 0.0);
  kernels::nonlinear_substep(u1, u2, 0.1);
  for (double v : u1) CHECK(v == 0.0);
  for (double v : u2) CHECK(v == 0.0);
}

TEST_CASE("for_each_index propagates exceptions") {
  for (Execution exec : {Execution::serial, Execution::parallel}) {
    CHECK_THROWS_AS(for_each_index(100, exec,
                                   [](std::size_t i) {
                                     if (i == 37) throw std::runtime_error("boom");
                                   }),
                    std::runtime_error);
    std::vector<int> hit(100, 0);
    for_each_index(100, exec, [&](std::size_t i) { hit[i] = 1; });
    for (int h : hit) CHECK(h == 1);
  }
}
