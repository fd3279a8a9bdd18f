#pragma once

// Brute-force reference decoder used as an independent oracle for the
// production grow/apply_op path. Windows are transformed by literal
// positional transcription of the per-operation bit formulas; the add and
// subtract operations use schoolbook ripple carry/borrow over digit vectors
// instead of machine integer arithmetic.

#include <vector>

#include "regen/epigenome.hpp"

namespace regen::testing {

inline std::vector<int> ref_apply(TagOp op, const std::vector<int>& x) {
  const int l = static_cast<int>(x.size());
  std::vector<int> y(x.size(), 0);
  switch (op) {
    case TagOp::kCircularShift:
      y[0] = x[static_cast<std::size_t>(l - 1)];
      for (int i = 1; i <= l - 1; ++i) y[i] = x[i - 1];
      break;
    case TagOp::kTranspose:
      for (int i = 0; i <= l - 1; ++i) y[i] = x[l - 1 - i];
      break;
    case TagOp::kSetTo:
      for (int i = 0; i <= l - 1; ++i) y[i] = x[0];
      break;
    case TagOp::kDoNothing:
      for (int i = 0; i <= l - 1; ++i) y[i] = x[i];
      break;
    case TagOp::kRightShiftByOne:
      y[0] = x[0];
      for (int i = 1; i <= l - 1; ++i) y[i] = x[i - 1];
      break;
    case TagOp::kLeftShiftByOne:
      for (int i = 0; i <= l - 2; ++i) y[i] = x[i + 1];
      y[static_cast<std::size_t>(l - 1)] = 0;
      break;
    case TagOp::kAddOne: {
      int carry = 1;
      for (int i = l - 1; i >= 0; --i) {
        const int s = x[i] + carry;
        y[i] = s % 2;
        carry = s / 2;
      }
      if (carry == 1) {
        // The sum needs l + 1 digits; the least significant one is
        // discarded, keeping the leading carry digit.
        for (int i = l - 1; i >= 1; --i) y[i] = y[i - 1];
        y[0] = 1;
      }
      break;
    }
    case TagOp::kSubtractOne: {
      int borrow = 1;
      for (int i = l - 1; i >= 0; --i) {
        int v = x[i] - borrow;
        if (v < 0) {
          v += 2;
          borrow = 1;
        } else {
          borrow = 0;
        }
        y[i] = v;
      }
      // A borrow surviving past the most significant digit wraps around.
      break;
    }
  }
  return y;
}

inline BitString ref_grow(const BitString& genotype, const Epigenotype& epi) {
  const std::size_t length = genotype.size();
  BitString out(length);
  std::size_t k = 0;
  while (k < length) {
    if (!epi[k].has_value()) {
      out[k] = genotype[k];
      ++k;
      continue;
    }
    const std::size_t l = std::min<std::size_t>(
        static_cast<std::size_t>(epi[k]->size()), length - k);
    std::vector<int> window(l);
    for (std::size_t i = 0; i < l; ++i) window[i] = genotype[k + i];
    const std::vector<int> transformed = ref_apply(epi[k]->op, window);
    for (std::size_t i = 0; i < l; ++i) {
      out[k + i] = static_cast<std::uint8_t>(transformed[i]);
    }
    k += l;
  }
  return out;
}

}  // namespace regen::testing
