#include "gplab/random_fields.hpp"

#include <cmath>

#include "gplab/multiplier.hpp"
#include "gplab/norms.hpp"

namespace gplab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ull));
}

RadialField random_band_limited(const RadialGrid& grid, std::mt19937_64& rng,
                                const BandLimitedOptions& opts) {
  // Draw through explicit uniform transforms so values do not depend on the
  // standard library's distribution implementations.
  auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  std::vector<double> a(opts.terms), b(opts.terms), s(opts.terms);
  for (int i = 0; i < opts.terms; ++i) {
    a[i] = uniform(-1.0, 1.0);
    b[i] = uniform(-0.3, 0.3);
    s[i] = uniform(opts.width_min, opts.width_max);
  }
  const RadialField raw = RadialField::from_function(grid, [&](double r) {
    double v = 0;
    for (int i = 0; i < opts.terms; ++i) {
      v += a[i] * (1.0 + b[i] * r * r) * std::exp(-r * r / (2.0 * s[i] * s[i]));
    }
    return cplx(v, 0.0);
  });
  const RadialField lp = apply(raw, Multiplier::P_le(opts.top_band));
  const double h1 = sobolev_norm(lp, 1.0);
  return (lp * (1.0 / h1)).to_physical();
}

}  // namespace gplab
