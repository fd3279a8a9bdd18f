#pragma once

#include <vector>

#include "regen/bitstring.hpp"

namespace regen {

// Closed interval [a, b] discretized on a 2^n - 1 step grid by the binary
// codec. n is the number of bits per encoded value.
struct RealInterval {
  double a = 0.0;
  double b = 1.0;
  int n = 32;
};

// Throws std::invalid_argument unless a < b and 1 <= n <= 63.
void validate(const RealInterval& iv);

// Maps an n-bit big-endian string s to a + u * (b - a) / (2^n - 1), where u
// is the unsigned integer value of s. The all-zeros string maps to a and the
// all-ones string to b.
double decode_real(const BitString& s, const RealInterval& iv);

// Inverse mapping: x in [a, b] to the n-bit string of
// round((2^n - 1) * (x - a) / (b - a)), rounding halves up.
BitString encode_real(double x, const RealInterval& iv);

// Decodes dimension consecutive n-bit slices of s.
std::vector<double> decode_vector(const BitString& s, const RealInterval& iv,
                                  int dimension);

// Concatenation of encode_real over the elements of v.
BitString encode_vector(const std::vector<double>& v, const RealInterval& iv);

}  // namespace regen
