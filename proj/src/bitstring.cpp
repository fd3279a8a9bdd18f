#include "regen/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace regen {

BitString BitString::from_string(std::string_view s) {
  BitString out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '0') {
      out.bits_[i] = 0;
    } else if (s[i] == '1') {
      out.bits_[i] = 1;
    } else {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
  return out;
}

BitString BitString::random(std::size_t length, Rng& rng) {
  BitString out(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.bits_[i] = rng.next_bit() ? 1 : 0;
  }
  return out;
}

std::uint64_t BitString::to_uint(std::size_t offset, std::size_t count) const {
  if (count > 64 || offset + count > bits_.size()) {
    throw std::invalid_argument("bit slice out of range");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    value = (value << 1) | bits_[offset + i];
  }
  return value;
}

std::size_t BitString::count_ones() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

}  // namespace regen
