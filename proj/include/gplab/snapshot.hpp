#pragma once

#include <filesystem>

#include "gplab/field.hpp"

namespace gplab {

struct Snapshot {
  double t = 0;
  RadialField field;
};

/// Little-endian record: n (u64), r_max (f64), rep (u64; 0 physical, 1 frequency),
/// t (f64), then n interleaved (re, im) pairs of f64.
std::vector<unsigned char> encode_snapshot(const RadialField& f, double t);
Snapshot decode_snapshot(const std::vector<unsigned char>& bytes);

void write_snapshot(const std::filesystem::path& path, const RadialField& f, double t);
Snapshot read_snapshot(const std::filesystem::path& path);

/// u₁ + iu₂ at node j, both components in physical representation.
RadialField combine_components(const RadialField& u1, const RadialField& u2);

}  // namespace gplab
