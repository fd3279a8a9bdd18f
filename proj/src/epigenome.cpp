#include "regen/epigenome.hpp"

#include <cmath>
#include <stdexcept>

namespace regen {

namespace {

// Core window transform shared by apply_op and grow. in and out may not
// alias; length is 1..32.
void apply_op_span(TagOp op, std::span<const std::uint8_t> in,
                   std::span<std::uint8_t> out) {
  const std::size_t l = in.size();
  switch (op) {
    case TagOp::kCircularShift:
      out[0] = in[l - 1];
      for (std::size_t i = 1; i < l; ++i) out[i] = in[i - 1];
      break;
    case TagOp::kTranspose:
      for (std::size_t i = 0; i < l; ++i) out[i] = in[l - 1 - i];
      break;
    case TagOp::kSetTo:
      for (std::size_t i = 0; i < l; ++i) out[i] = in[0];
      break;
    case TagOp::kDoNothing:
      for (std::size_t i = 0; i < l; ++i) out[i] = in[i];
      break;
    case TagOp::kRightShiftByOne:
      out[0] = in[0];
      for (std::size_t i = 1; i < l; ++i) out[i] = in[i - 1];
      break;
    case TagOp::kLeftShiftByOne:
      for (std::size_t i = 0; i + 1 < l; ++i) out[i] = in[i + 1];
      out[l - 1] = 0;
      break;
    case TagOp::kAddOne: {
      std::uint64_t u = 0;
      for (std::size_t i = 0; i < l; ++i) u = (u << 1) | in[i];
      std::uint64_t s = u + 1;
      // On overflow the (l+1)-bit sum loses its least significant bit.
      if (s >> l != 0) s >>= 1;
      for (std::size_t i = 0; i < l; ++i) {
        out[l - 1 - i] = static_cast<std::uint8_t>(s & 1);
        s >>= 1;
      }
      break;
    }
    case TagOp::kSubtractOne: {
      std::uint64_t u = 0;
      for (std::size_t i = 0; i < l; ++i) u = (u << 1) | in[i];
      // Borrowing out of the window wraps the all-zero window to all ones.
      std::uint64_t s = (u == 0) ? ((std::uint64_t{1} << l) - 1) : u - 1;
      for (std::size_t i = 0; i < l; ++i) {
        out[l - 1 - i] = static_cast<std::uint8_t>(s & 1);
        s >>= 1;
      }
      break;
    }
  }
}

}  // namespace

int gene_size(std::uint8_t size_code) {
  return size_code == 0 ? 32 : static_cast<int>(size_code);
}

Tag Tag::from_byte(std::uint8_t byte) {
  return Tag{static_cast<TagOp>(byte >> 5),
             static_cast<std::uint8_t>(byte & 0x1f)};
}

Tag Tag::from_string(std::string_view s) {
  if (s.size() != 8) {
    throw std::invalid_argument("tag string must have exactly 8 characters");
  }
  std::uint8_t byte = 0;
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("tag string may contain only '0' and '1'");
    }
    byte = static_cast<std::uint8_t>((byte << 1) | (c == '1'));
  }
  return from_byte(byte);
}

std::uint8_t Tag::to_byte() const {
  return static_cast<std::uint8_t>((static_cast<std::uint8_t>(op) << 5) |
                                   (size_code & 0x1f));
}

std::string Tag::to_string() const {
  std::string s(8, '0');
  std::uint8_t byte = to_byte();
  for (int i = 7; i >= 0; --i) {
    if (byte & 1) s[static_cast<std::size_t>(i)] = '1';
    byte >>= 1;
  }
  return s;
}

std::size_t tag_count(const Epigenotype& epi) {
  std::size_t n = 0;
  for (const auto& slot : epi) {
    if (slot.has_value()) ++n;
  }
  return n;
}

void validate(const MarkingParams& params) {
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_unit(params.mark_rate) || !in_unit(params.p_add) ||
      !in_unit(params.p_remove) || !in_unit(params.p_modify)) {
    throw std::invalid_argument("marking probabilities must be in [0, 1]");
  }
  if (std::abs(params.p_add + params.p_remove + params.p_modify - 1.0) >
      1e-12) {
    throw std::invalid_argument(
        "add, remove and modify probabilities must sum to 1");
  }
}

BitString apply_op(TagOp op, const BitString& window) {
  if (window.empty()) {
    throw std::invalid_argument("operation window may not be empty");
  }
  if (window.size() > 32) {
    throw std::invalid_argument("operation window is limited to 32 bits");
  }
  BitString out(window.size());
  apply_op_span(op, window.view(0, window.size()),
                out.view(0, out.size()));
  return out;
}

BitString grow(const BitString& genotype, const Epigenotype& epi) {
  const std::size_t length = genotype.size();
  if (epi.size() != length) {
    throw std::invalid_argument(
        "genotype and epigenotype lengths must match");
  }
  BitString out(length);
  std::size_t k = 0;
  while (k < length) {
    const auto& slot = epi[k];
    if (!slot.has_value()) {
      out[k] = genotype[k];
      ++k;
      continue;
    }
    // Window clamped at the end of the chromosome.
    const std::size_t l =
        std::min<std::size_t>(static_cast<std::size_t>(slot->size()),
                              length - k);
    apply_op_span(slot->op, genotype.view(k, l), out.view(k, l));
    k += l;
  }
  return out;
}

Epigenotype mark(const Epigenotype& epi, const MarkingParams& params,
                 Rng& rng) {
  validate(params);
  Epigenotype out = epi;
  if (params.mark_rate <= 0.0) return out;
  for (auto& slot : out) {
    if (!rng.next_bool(params.mark_rate)) continue;
    const double action = rng.next_double();
    if (action < params.p_add) {
      if (!slot.has_value()) slot = random_tag(rng);
    } else if (action < params.p_add + params.p_remove) {
      slot.reset();
    } else if (slot.has_value()) {
      std::uint8_t byte = slot->to_byte();
      for (int bit = 7; bit >= 0; --bit) {
        if (rng.next_bool(1.0 / 8.0)) byte ^= static_cast<std::uint8_t>(1u << bit);
      }
      slot = Tag::from_byte(byte);
    }
  }
  return out;
}

Tag random_tag(Rng& rng) {
  return Tag::from_byte(static_cast<std::uint8_t>(rng.next_below(256)));
}

}  // namespace regen
