#pragma once

#include <numeric>

namespace kummer {

/// Floor division for any sign; b != 0.
constexpr long floor_div(long a, long b) noexcept {
  const long q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

constexpr long ceil_div(long a, long b) noexcept { return -floor_div(-a, b); }

/// Least nonnegative residue.
constexpr long mod_pos(long a, long m) noexcept {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace kummer
