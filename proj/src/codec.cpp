#include "regen/codec.hpp"

#include <cmath>
#include <stdexcept>

namespace regen {

namespace {

// 2^n - 1 as a double-exact integer for n <= 63.
std::uint64_t grid_max(int n) { return (std::uint64_t{1} << n) - 1; }

}  // namespace

void validate(const RealInterval& iv) {
  if (!(iv.a < iv.b)) {
    throw std::invalid_argument("interval requires a < b");
  }
  if (iv.n < 1 || iv.n > 63) {
    throw std::invalid_argument("bits per value must be in [1, 63]");
  }
}

double decode_real(const BitString& s, const RealInterval& iv) {
  validate(iv);
  if (s.size() != static_cast<std::size_t>(iv.n)) {
    throw std::invalid_argument("bit string length does not match interval");
  }
  const std::uint64_t u = s.to_uint(0, s.size());
  return iv.a + static_cast<double>(u) * (iv.b - iv.a) /
                    static_cast<double>(grid_max(iv.n));
}

BitString encode_real(double x, const RealInterval& iv) {
  validate(iv);
  if (!(x >= iv.a && x <= iv.b)) {
    throw std::domain_error("value outside the interval");
  }
  const double m = static_cast<double>(grid_max(iv.n));
  const double t = m * ((x - iv.a) / (iv.b - iv.a));
  // round-half-up
  std::uint64_t u = static_cast<std::uint64_t>(std::floor(t + 0.5));
  if (u > grid_max(iv.n)) u = grid_max(iv.n);
  BitString out(static_cast<std::size_t>(iv.n));
  for (int i = iv.n - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(u & 1);
    u >>= 1;
  }
  return out;
}

std::vector<double> decode_vector(const BitString& s, const RealInterval& iv,
                                  int dimension) {
  validate(iv);
  if (dimension < 1) {
    throw std::invalid_argument("dimension must be positive");
  }
  const std::size_t n = static_cast<std::size_t>(iv.n);
  if (s.size() != n * static_cast<std::size_t>(dimension)) {
    throw std::invalid_argument(
        "bit string length does not split into dimension slices");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(dimension));
  for (int d = 0; d < dimension; ++d) {
    const std::uint64_t u = s.to_uint(static_cast<std::size_t>(d) * n, n);
    out.push_back(iv.a + static_cast<double>(u) * (iv.b - iv.a) /
                             static_cast<double>(grid_max(iv.n)));
  }
  return out;
}

BitString encode_vector(const std::vector<double>& v, const RealInterval& iv) {
  validate(iv);
  BitString out(v.size() * static_cast<std::size_t>(iv.n));
  std::size_t pos = 0;
  for (double x : v) {
    const BitString enc = encode_real(x, iv);
    for (std::size_t i = 0; i < enc.size(); ++i) out[pos++] = enc[i];
  }
  return out;
}

}  // namespace regen
