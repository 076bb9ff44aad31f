#pragma once

#include <cstdint>

#include "burnside/errors.hpp"

namespace burnside {

using i64 = long long;

// All ring/lattice coefficients are 64-bit integers with mandatory overflow
// detection; an overflowing computation aborts with resource_error rather
// than wrapping.

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw resource_error("integer overflow in exact arithmetic (add)");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw resource_error("integer overflow in exact arithmetic (sub)");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw resource_error("integer overflow in exact arithmetic (mul)");
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

inline i64 checked_abs(i64 a) { return a < 0 ? checked_neg(a) : a; }

// Floor division, b != 0.  floor_div(-7, 2) == -4.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace burnside
