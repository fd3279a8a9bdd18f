#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regen/rng.hpp"

namespace regen {

// Fixed-length sequence of bits stored one per byte. Index 0 is the
// leftmost, most significant position throughout the library.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length) : bits_(length, 0) {}

  // Parses a string of '0'/'1' characters; throws on anything else.
  static BitString from_string(std::string_view s);

  // Uniform random bit string of the given length; one rng bit per position.
  static BitString random(std::size_t length, Rng& rng);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::uint8_t& operator[](std::size_t i) { return bits_[i]; }

  void flip(std::size_t i) { bits_[i] ^= 1; }

  std::span<const std::uint8_t> view(std::size_t offset,
                                     std::size_t count) const {
    return {bits_.data() + offset, count};
  }
  std::span<std::uint8_t> view(std::size_t offset, std::size_t count) {
    return {bits_.data() + offset, count};
  }

  // Big-endian unsigned value of bits [offset, offset + count); count <= 64.
  std::uint64_t to_uint(std::size_t offset, std::size_t count) const;

  std::size_t count_ones() const;

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace regen
