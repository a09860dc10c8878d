#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <span>

namespace gplab {

enum class Execution { serial, parallel };

/// Runs f(i) for i in [0, n). The parallel path uses an OpenMP loop with dynamic
/// scheduling; the first exception thrown by any iteration is rethrown.
template <class F>
void for_each_index(std::size_t n, Execution exec, F&& f) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

namespace kernels {

/// One classical RK4 step of the pointwise GP nonlinearity
///   u̇₁ = (2u₁+|u|²)u₂,  u̇₂ = −(3u₁²+u₂²+|u|²u₁)
/// applied at every node, in place. OpenMP over nodes.
void nonlinear_substep(std::span<double> u1, std::span<double> u2, double dt);

/// Pointwise right side of the same ODE, OpenMP over nodes.
void nonlinear_rhs(std::span<const double> u1, std::span<const double> u2,
                   std::span<double> du1, std::span<double> du2);

/// Σ_i w_i |f_i|^p, evaluated in fixed-size blocks so the result does not depend
/// on the thread count.
double weighted_power_sum(std::span<const double> w, std::span<const double> f, double p);

namespace serial {

void nonlinear_substep(std::span<double> u1, std::span<double> u2, double dt);
void nonlinear_rhs(std::span<const double> u1, std::span<const double> u2,
                   std::span<double> du1, std::span<double> du2);
double weighted_power_sum(std::span<const double> w, std::span<const double> f, double p);

}  // namespace serial
}  // namespace kernels
}  // namespace gplab
