#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "gplab/grid.hpp"

namespace gplab {

using cplx = std::complex<double>;

enum class Rep { physical, frequency };

/// Complex radial profile on a shared grid, immutable once built.
class RadialField {
 public:
  RadialField(RadialGrid grid, Rep rep, std::vector<cplx> data);

  static RadialField zeros(const RadialGrid& grid, Rep rep = Rep::physical);
  static RadialField from_function(const RadialGrid& grid, const std::function<cplx(double)>& f);
  static RadialField from_spectrum(const RadialGrid& grid, const std::function<cplx(double)>& f);
  static RadialField from_real(const RadialGrid& grid, Rep rep, std::span<const double> re);

  const RadialGrid& grid() const { return grid_; }
  Rep rep() const { return rep_; }
  std::size_t size() const { return data_.size(); }
  std::span<const cplx> data() const { return data_; }
  cplx operator[](std::size_t i) const { return data_[i]; }

  std::vector<double> real() const;
  std::vector<double> imag() const;

  RadialField to_frequency() const;
  RadialField to_physical() const;
  RadialField to(Rep rep) const;

  // Pointwise arithmetic in the representation of the left operand.
  RadialField operator+(const RadialField& o) const;
  RadialField operator-(const RadialField& o) const;
  RadialField operator*(cplx s) const;
  RadialField conj() const;

  // Discrete L²(ℝ³) norm evaluated on either side.
  double l2_physical() const;
  double l2_frequency() const;

 private:
  RadialGrid grid_;
  Rep rep_;
  std::vector<cplx> data_;
};

RadialField forward_transform(const RadialField& f);
RadialField inverse_transform(const RadialField& f);

/// Pointwise product formed in physical space, returned in physical space with
/// modes above the 2/3 cutoff removed.
RadialField dealiased_product(const RadialField& a, const RadialField& b);
RadialField dealias(const RadialField& f);

/// ∂_r f, computed spectrally; returned in physical representation.
RadialField radial_derivative(const RadialField& f);

void check_same_grid(const RadialField& a, const RadialField& b);

}  // namespace gplab
