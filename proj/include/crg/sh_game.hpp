#pragma once

#include <cstdint>
#include <string>

#include "crg/errors.hpp"

namespace crg {

/// Simple hot game {a | b | c}: Left's only move goes to a, Right's to c,
/// and the same-round option is b. Requires a >= b >= c.
struct SHGame {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  SHGame() = default;
  SHGame(std::int64_t a_, std::int64_t b_, std::int64_t c_)
      : a(a_), b(b_), c(c_) {
    if (!(a >= b && b >= c)) {
      throw PreconditionError("simple hot game needs a >= b >= c, got " +
                              to_string());
    }
  }

  /// {-c | -b | -a}
  SHGame conjugate() const { return SHGame(-c, -b, -a); }
  std::int64_t spread() const { return a - c; }
  bool normalized() const { return b == 0; }

  std::string to_string() const {
    return "{" + std::to_string(a) + "|" + std::to_string(b) + "|" +
           std::to_string(c) + "}";
  }

  friend bool operator==(const SHGame&, const SHGame&) = default;
};

}  // namespace crg
