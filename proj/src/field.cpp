#include "gplab/field.hpp"

#include <cmath>

#include "gplab/errors.hpp"

namespace gplab {

namespace {

using Op = void (RadialGrid::*)(std::span<const double>, std::span<double>) const;

std::vector<cplx> apply_real_op(const RadialGrid& g, Op op, std::span<const cplx> in) {
  const std::size_t n = in.size();
  std::vector<double> re(n), im(n), tre(n), tim(n, 0.0);
  bool has_imag = false;
  for (std::size_t i = 0; i < n; ++i) {
    re[i] = in[i].real();
    im[i] = in[i].imag();
    has_imag = has_imag || im[i] != 0.0;
  }
  (g.*op)(re, tre);
  if (has_imag) (g.*op)(im, tim);
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {tre[i], tim[i]};
  return out;
}

}  // namespace

void check_same_grid(const RadialField& a, const RadialField& b) {
  if (!(a.grid() == b.grid())) throw PreconditionError("fields live on different grids");
}

RadialField::RadialField(RadialGrid grid, Rep rep, std::vector<cplx> data)
    : grid_(std::move(grid)), rep_(rep), data_(std::move(data)) {
  if (data_.size() != grid_.size()) throw PreconditionError("RadialField: size mismatch");
}

RadialField RadialField::zeros(const RadialGrid& grid, Rep rep) {
  return RadialField(grid, rep, std::vector<cplx>(grid.size()));
}

RadialField RadialField::from_function(const RadialGrid& grid,
                                       const std::function<cplx(double)>& f) {
  std::vector<cplx> d(grid.size());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = f(grid.r(j));
  return RadialField(grid, Rep::physical, std::move(d));
}

RadialField RadialField::from_spectrum(const RadialGrid& grid,
                                       const std::function<cplx(double)>& f) {
  std::vector<cplx> d(grid.size());
  for (std::size_t m = 0; m < d.size(); ++m) d[m] = f(grid.rho(m));
  return RadialField(grid, Rep::frequency, std::move(d));
}

RadialField RadialField::from_real(const RadialGrid& grid, Rep rep, std::span<const double> re) {
  std::vector<cplx> d(re.begin(), re.end());
  return RadialField(grid, rep, std::move(d));
}

std::vector<double> RadialField::real() const {
  std::vector<double> out(data_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = data_[i].real();
  return out;
}

std::vector<double> RadialField::imag() const {
  std::vector<double> out(data_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = data_[i].imag();
  return out;
}

RadialField RadialField::to_frequency() const {
  if (rep_ == Rep::frequency) return *this;
  return RadialField(grid_, Rep::frequency, apply_real_op(grid_, &RadialGrid::forward, data_));
}

RadialField RadialField::to_physical() const {
  if (rep_ == Rep::physical) return *this;
  return RadialField(grid_, Rep::physical, apply_real_op(grid_, &RadialGrid::inverse, data_));
}

RadialField RadialField::to(Rep rep) const {
  return rep == Rep::physical ? to_physical() : to_frequency();
}

RadialField RadialField::operator+(const RadialField& o) const {
  check_same_grid(*this, o);
  const RadialField b = o.to(rep_);
  std::vector<cplx> d(data_);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += b.data_[i];
  return RadialField(grid_, rep_, std::move(d));
}

RadialField RadialField::operator-(const RadialField& o) const { return *this + o * cplx(-1.0); }

RadialField RadialField::operator*(cplx s) const {
  std::vector<cplx> d(data_);
  for (auto& v : d) v *= s;
  return RadialField(grid_, rep_, std::move(d));
}

RadialField RadialField::conj() const {
  std::vector<cplx> d(data_);
  for (auto& v : d) v = std::conj(v);
  return RadialField(grid_, rep_, std::move(d));
}

double RadialField::l2_physical() const {
  const RadialField p = to_physical();
  double s = 0;
  for (std::size_t j = 0; j < p.size(); ++j) s += grid_.physical_weight(j) * std::norm(p.data_[j]);
  return std::sqrt(s);
}

double RadialField::l2_frequency() const {
  const RadialField f = to_frequency();
  double s = 0;
  for (std::size_t m = 0; m < f.size(); ++m) s += grid_.frequency_weight(m) * std::norm(f.data_[m]);
  return std::sqrt(s);
}

RadialField forward_transform(const RadialField& f) {
  if (f.rep() != Rep::physical) throw PreconditionError("forward_transform: expected physical field");
  return f.to_frequency();
}

RadialField inverse_transform(const RadialField& f) {
  if (f.rep() != Rep::frequency) throw PreconditionError("inverse_transform: expected frequency field");
  return f.to_physical();
}

RadialField dealias(const RadialField& f) {
  const RadialField h = f.to_frequency();
  std::vector<cplx> d(h.data().begin(), h.data().end());
  for (std::size_t m = f.grid().dealias_cutoff(); m < d.size(); ++m) d[m] = 0.0;
  return RadialField(f.grid(), Rep::frequency, std::move(d)).to_physical();
}

RadialField dealiased_product(const RadialField& a, const RadialField& b) {
  check_same_grid(a, b);
  const RadialField pa = a.to_physical();
  const RadialField pb = b.to_physical();
  std::vector<cplx> d(pa.size());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = pa[j] * pb[j];
  return dealias(RadialField(a.grid(), Rep::physical, std::move(d)));
}

RadialField radial_derivative(const RadialField& f) {
  const RadialField h = f.to_frequency();
  return RadialField(f.grid(), Rep::physical,
                     apply_real_op(f.grid(), &RadialGrid::radial_derivative, h.data()));
}

}  // namespace gplab
