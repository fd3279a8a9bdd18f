#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regen/bitstring.hpp"

namespace regen {

// The eight bit operations a tag can request, keyed by their 3-bit code.
enum class TagOp : std::uint8_t {
  kCircularShift = 0b000,
  kTranspose = 0b001,
  kSetTo = 0b010,
  kDoNothing = 0b011,
  kRightShiftByOne = 0b100,
  kAddOne = 0b101,
  kLeftShiftByOne = 0b110,
  kSubtractOne = 0b111,
};

// Number of alleles covered by a tag with the given 5-bit size code.
// Codes 1..31 map to themselves; code 0 maps to 32.
int gene_size(std::uint8_t size_code);

// 8-bit epigenetic marker: 3 operation bits followed by 5 gene-size bits.
struct Tag {
  TagOp op = TagOp::kDoNothing;
  std::uint8_t size_code = 1;  // 5 bits

  static Tag from_byte(std::uint8_t byte);
  static Tag from_string(std::string_view s);  // exactly 8 chars of '0'/'1'

  std::uint8_t to_byte() const;
  // Serializes to exactly 8 characters, operation bits then size bits.
  std::string to_string() const;

  int size() const { return gene_size(size_code); }

  friend bool operator==(const Tag&, const Tag&) = default;
};

// Per-allele optional tag layer; kept at the same length as the paired
// chromosome at all times.
using Epigenotype = std::vector<std::optional<Tag>>;

std::size_t tag_count(const Epigenotype& epi);

// Probabilities governing one marking pass. mark_rate is the per-allele
// chance that anything happens; the action probabilities are conditional on
// that and must sum to 1.
struct MarkingParams {
  double mark_rate = 0.02;
  double p_add = 0.35;
  double p_remove = 0.35;
  double p_modify = 0.30;
};

void validate(const MarkingParams& params);

// Applies the named operation to a window of 1..32 bits. The window's first
// bit is the marked allele. The input is not modified.
BitString apply_op(TagOp op, const BitString& window);

// Decodes a tagged chromosome into the bit string used for the phenotype.
//
// Scans left to right: an untagged allele is copied; a tagged allele at
// position k with gene size l transforms the window [k, min(k+l, L)) and the
// scan resumes past it, so tags inside a consumed window are never applied.
// Neither input is modified and the output length equals the input length.
BitString grow(const BitString& genotype, const Epigenotype& epi);

// One marking pass. Per allele, with probability mark_rate, exactly one
// action is drawn: add (attaches a random tag if the slot is empty), remove
// (clears an occupied slot) or modify (flips each of the 8 tag bits of an
// occupied slot with probability 1/8). A zero mark_rate draws nothing from
// the rng stream.
Epigenotype mark(const Epigenotype& epi, const MarkingParams& params,
                 Rng& rng);

// Tag with all 8 bits drawn uniformly and independently.
Tag random_tag(Rng& rng);

}  // namespace regen
