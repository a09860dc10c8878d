#pragma once

#include <vector>

#include "gplab/grid.hpp"

namespace gplab::detail {

using Vec = std::vector<double>;

enum class Sym {
  U,           // ρ/√(2+ρ²)
  U_inv,       // √(2+ρ²)/ρ
  H,           // ρ√(2+ρ²)
  A,           // 1/(2+ρ²)
  lap,         // −ρ²
  lap_A,       // −ρ²/(2+ρ²), i.e. Δ/(2−Δ)
  two_plus_A,  // (2−ρ²)/(2+ρ²), i.e. (2+Δ)/(2−Δ)
};

/// Real-valued pseudospectral toolkit on one grid: multipliers act on the
/// frequency side, products are formed pointwise then 2/3-dealiased.
class Spectral {
 public:
  explicit Spectral(const RadialGrid& grid);

  const RadialGrid& grid() const { return grid_; }
  std::size_t size() const { return grid_.size(); }

  Vec fwd(const Vec& phys) const;
  Vec inv(const Vec& freq) const;
  const Vec& symbol(Sym s) const;

  // Physical in, physical out.
  Vec apply(Sym s, const Vec& phys) const;
  Vec dr(const Vec& phys) const;
  Vec prod(const Vec& a, const Vec& b) const;

  // Frequency-side weighted norms of a physical field.
  double l2(const Vec& phys) const;
  double h1(const Vec& phys) const;

 private:
  RadialGrid grid_;
  std::vector<Vec> symbols_;
};

Vec add(const Vec& a, const Vec& b, double cb = 1.0);
Vec scale(const Vec& a, double c);

}  // namespace gplab::detail
