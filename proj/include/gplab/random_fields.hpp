#pragma once

#include <cstdint>
#include <random>

#include "gplab/field.hpp"

namespace gplab {

/// One step of the splitmix64 sequence.
std::uint64_t splitmix64(std::uint64_t x);

/// Independent generator for stream `index` of a run seeded with `seed`.
/// Stream i is seeded with splitmix64(seed + (i+1)·0x9E3779B97F4A7C15).
std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t index);

struct BandLimitedOptions {
  int terms = 3;
  double width_min = 1.2;
  double width_max = 2.5;
  int top_band = 2;  // low-pass P_{≤top_band}
};

/// Smooth real radial profile Σ a_j(1 + b_j r²)e^{−r²/(2s_j²)}, low-passed; unit H¹ norm.
RadialField random_band_limited(const RadialGrid& grid, std::mt19937_64& rng,
                                const BandLimitedOptions& opts = {});

}  // namespace gplab
