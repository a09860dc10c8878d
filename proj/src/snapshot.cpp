#include "gplab/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "gplab/errors.hpp"
#include "gplab/io.hpp"

namespace gplab {

namespace {

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void put_f64(std::vector<unsigned char>& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

std::uint64_t get_u64(const std::vector<unsigned char>& in, std::size_t& pos) {
  if (pos + 8 > in.size()) throw DomainError("snapshot: truncated record");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
  pos += 8;
  return v;
}

double get_f64(const std::vector<unsigned char>& in, std::size_t& pos) {
  return std::bit_cast<double>(get_u64(in, pos));
}

}  // namespace

std::vector<unsigned char> encode_snapshot(const RadialField& f, double t) {
  std::vector<unsigned char> out;
  out.reserve(32 + 16 * f.size());
  put_u64(out, f.size());
  put_f64(out, f.grid().r_max());
  put_u64(out, f.rep() == Rep::physical ? 0 : 1);
  put_f64(out, t);
  for (cplx z : f.data()) {
    put_f64(out, z.real());
    put_f64(out, z.imag());
  }
  return out;
}

Snapshot decode_snapshot(const std::vector<unsigned char>& bytes) {
  std::size_t pos = 0;
  const std::uint64_t n = get_u64(bytes, pos);
  const double r_max = get_f64(bytes, pos);
  const std::uint64_t rep = get_u64(bytes, pos);
  const double t = get_f64(bytes, pos);
  if (rep > 1) throw DomainError("snapshot: invalid representation flag");
  if (bytes.size() != 32 + 16 * n) throw DomainError("snapshot: size does not match header");
  std::vector<cplx> data(n);
  for (auto& z : data) {
    const double re = get_f64(bytes, pos);
    z = cplx(re, get_f64(bytes, pos));
  }
  return {t, RadialField(RadialGrid(n, r_max), rep == 0 ? Rep::physical : Rep::frequency, std::move(data))};
}

void write_snapshot(const std::filesystem::path& path, const RadialField& f, double t) {
  const auto bytes = encode_snapshot(f, t);
  write_file_atomic(path, std::string(bytes.begin(), bytes.end()));
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("snapshot: cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_snapshot(bytes);
}

RadialField combine_components(const RadialField& u1, const RadialField& u2) {
  check_same_grid(u1, u2);
  const RadialField a = u1.to_physical(), b = u2.to_physical();
  std::vector<cplx> data(a.size());
  for (std::size_t j = 0; j < data.size(); ++j) data[j] = cplx(a[j].real(), b[j].real());
  return RadialField(a.grid(), Rep::physical, std::move(data));
}

}  // namespace gplab
