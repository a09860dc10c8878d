#include "gplab/kernels.hpp"

#include <cmath>
#include <vector>

namespace gplab::kernels {

namespace {

inline void rhs_point(double a, double b, double& da, double& db) {
  const double m2 = a * a + b * b;
  da = (2.0 * a + m2) * b;
  db = -(3.0 * a * a + b * b + m2 * a);
}

inline void rk4_point(double& a, double& b, double dt) {
  double k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b;
  rhs_point(a, b, k1a, k1b);
  rhs_point(a + 0.5 * dt * k1a, b + 0.5 * dt * k1b, k2a, k2b);
  rhs_point(a + 0.5 * dt * k2a, b + 0.5 * dt * k2b, k3a, k3b);
  rhs_point(a + dt * k3a, b + dt * k3b, k4a, k4b);
  a += dt / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
  b += dt / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
}

constexpr long kBlock = 256;

}  // namespace

void nonlinear_substep(std::span<double> u1, std::span<double> u2, double dt) {
  const long n = static_cast<long>(u1.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j) rk4_point(u1[j], u2[j], dt);
}

void nonlinear_rhs(std::span<const double> u1, std::span<const double> u2,
                   std::span<double> du1, std::span<double> du2) {
  const long n = static_cast<long>(u1.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j) rhs_point(u1[j], u2[j], du1[j], du2[j]);
}

double weighted_power_sum(std::span<const double> w, std::span<const double> f, double p) {
  const long n = static_cast<long>(f.size());
  const long blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (long b = 0; b < blocks; ++b) {
    double s = 0;
    const long end = std::min(n, (b + 1) * kBlock);
    for (long j = b * kBlock; j < end; ++j) s += w[j] * std::pow(std::abs(f[j]), p);
    partial[b] = s;
  }
  double total = 0;
  for (double s : partial) total += s;
  return total;
}

namespace serial {

void nonlinear_substep(std::span<double> u1, std::span<double> u2, double dt) {
  for (std::size_t j = 0; j < u1.size(); ++j) {
    const double h = dt;
    double a = u1[j], b = u2[j];
    auto fa = [](double x, double y) { return (2.0 * x + x * x + y * y) * y; };
    auto fb = [](double x, double y) { return -(3.0 * x * x + y * y + (x * x + y * y) * x); };
    const double k1a = fa(a, b), k1b = fb(a, b);
    const double k2a = fa(a + h / 2 * k1a, b + h / 2 * k1b), k2b = fb(a + h / 2 * k1a, b + h / 2 * k1b);
    const double k3a = fa(a + h / 2 * k2a, b + h / 2 * k2b), k3b = fb(a + h / 2 * k2a, b + h / 2 * k2b);
    const double k4a = fa(a + h * k3a, b + h * k3b), k4b = fb(a + h * k3a, b + h * k3b);
    u1[j] = a + h / 6 * (k1a + 2 * k2a + 2 * k3a + k4a);
    u2[j] = b + h / 6 * (k1b + 2 * k2b + 2 * k3b + k4b);
  }
}

void nonlinear_rhs(std::span<const double> u1, std::span<const double> u2,
                   std::span<double> du1, std::span<double> du2) {
  for (std::size_t j = 0; j < u1.size(); ++j) {
    const double a = u1[j], b = u2[j];
    du1[j] = (2.0 * a + a * a + b * b) * b;
    du2[j] = -(3.0 * a * a + b * b + (a * a + b * b) * a);
  }
}

double weighted_power_sum(std::span<const double> w, std::span<const double> f, double p) {
  const std::size_t n = f.size();
  double total = 0;
  for (std::size_t start = 0; start < n; start += kBlock) {
    double s = 0;
    for (std::size_t j = start; j < std::min(n, start + kBlock); ++j) s += w[j] * std::pow(std::abs(f[j]), p);
    total += s;
  }
  return total;
}

}  // namespace serial
}  // namespace gplab::kernels
