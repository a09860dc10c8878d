#include "gplab/gp_state.hpp"

#include <cmath>
#include <sstream>

#include "gplab/norms.hpp"
#include "gplab/random_fields.hpp"
#include "spectral.hpp"

namespace gplab {

namespace detail {

Spectral::Spectral(const RadialGrid& grid) : grid_(grid), symbols_(7) {
  const std::size_t n = grid.size();
  for (auto& s : symbols_) s.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double rho = grid.rho(m);
    const double q = 2.0 + rho * rho;
    symbols_[static_cast<int>(Sym::U)][m] = rho / std::sqrt(q);
    symbols_[static_cast<int>(Sym::U_inv)][m] = std::sqrt(q) / rho;
    symbols_[static_cast<int>(Sym::H)][m] = rho * std::sqrt(q);
    symbols_[static_cast<int>(Sym::A)][m] = 1.0 / q;
    symbols_[static_cast<int>(Sym::lap)][m] = -rho * rho;
    symbols_[static_cast<int>(Sym::lap_A)][m] = -rho * rho / q;
    symbols_[static_cast<int>(Sym::two_plus_A)][m] = (2.0 - rho * rho) / q;
  }
}

Vec Spectral::fwd(const Vec& phys) const {
  Vec out(size());
  grid_.forward(phys, out);
  return out;
}

Vec Spectral::inv(const Vec& freq) const {
  Vec out(size());
  grid_.inverse(freq, out);
  return out;
}

const Vec& Spectral::symbol(Sym s) const { return symbols_[static_cast<int>(s)]; }

Vec Spectral::apply(Sym s, const Vec& phys) const {
  Vec f = fwd(phys);
  const Vec& w = symbol(s);
  for (std::size_t m = 0; m < f.size(); ++m) f[m] *= w[m];
  return inv(f);
}

Vec Spectral::dr(const Vec& phys) const {
  Vec out(size());
  grid_.radial_derivative(fwd(phys), out);
  return out;
}

Vec Spectral::prod(const Vec& a, const Vec& b) const {
  Vec p(size());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = a[j] * b[j];
  Vec f = fwd(p);
  for (std::size_t m = grid_.dealias_cutoff(); m < f.size(); ++m) f[m] = 0.0;
  return inv(f);
}

double Spectral::l2(const Vec& phys) const {
  const Vec f = fwd(phys);
  double s = 0;
  for (std::size_t m = 0; m < f.size(); ++m) s += grid_.frequency_weight(m) * f[m] * f[m];
  return std::sqrt(s);
}

double Spectral::h1(const Vec& phys) const {
  const Vec f = fwd(phys);
  double s = 0;
  for (std::size_t m = 0; m < f.size(); ++m) {
    const double rho = grid_.rho(m);
    s += grid_.frequency_weight(m) * (1.0 + rho * rho) * f[m] * f[m];
  }
  return std::sqrt(s);
}

Vec add(const Vec& a, const Vec& b, double cb) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + cb * b[i];
  return out;
}

Vec scale(const Vec& a, double c) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

}  // namespace detail

GPState GPState::zero(const RadialGrid& grid, double t) {
  return {t, RadialField::zeros(grid), RadialField::zeros(grid)};
}

GPState GPState::from_real(const RadialGrid& grid, std::span<const double> u1,
                           std::span<const double> u2, double t) {
  return {t, RadialField::from_real(grid, Rep::physical, u1),
          RadialField::from_real(grid, Rep::physical, u2)};
}

double GPState::imaginary_leak() const {
  double re = 0, im = 0;
  for (const RadialField* f : {&u1, &u2}) {
    const RadialField p = f->to_physical();
    for (auto v : p.data()) {
      re = std::max(re, std::abs(v.real()));
      im = std::max(im, std::abs(v.imag()));
    }
  }
  return re > 0 ? im / re : im;
}

GPState GPState::scaled(double eps) const {
  return {t, (u1 * eps).to_physical(), (u2 * eps).to_physical()};
}

std::string SignConvention::describe() const {
  std::ostringstream os;
  os << "s_n3=" << s_n3 << " s_n4=" << s_n4 << " s_n5=" << s_n5 << " c_n5c=" << c_n5c.numerator()
     << "/" << c_n5c.denominator();
  return os.str();
}

GPState random_state(const RadialGrid& grid, std::mt19937_64& rng, double h1_norm) {
  const RadialField a = random_band_limited(grid, rng);
  const RadialField b = random_band_limited(grid, rng);
  const double c = h1_norm / std::sqrt(2.0);
  return {0.0, (a * c).to_physical(), (b * c).to_physical()};
}

double state_h1_norm(const GPState& s) {
  return std::hypot(sobolev_norm(s.u1, 1.0), sobolev_norm(s.u2, 1.0));
}

}  // namespace gplab
