#pragma once

namespace regen {

enum class Direction { maximize, minimize };

// True when fitness a is strictly better than b under the given direction.
inline bool better(double a, double b, Direction dir) {
  return dir == Direction::maximize ? a > b : a < b;
}

}  // namespace regen
