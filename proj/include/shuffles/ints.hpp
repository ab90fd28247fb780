#pragma once

#include <cstdint>

#include "shuffles/errors.hpp"

namespace shuffles {

using Int = std::int64_t;

// Exact 64-bit arithmetic; overflow raises instead of wrapping.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        raise(Errc::arithmetic_overflow, "integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        raise(Errc::arithmetic_overflow, "integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        raise(Errc::arithmetic_overflow, "integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// b^e for e >= 0 (0^0 = 1); e < 0 raises negative_exponent.
inline Int checked_pow(Int base, Int exp) {
    if (exp < 0)
        raise(Errc::negative_exponent, "negative exponent in integer power");
    Int result = 1;
    Int acc = base;
    while (exp > 0) {
        if (exp & 1) result = checked_mul(result, acc);
        exp >>= 1;
        if (exp > 0) acc = checked_mul(acc, acc);
    }
    return result;
}

} // namespace shuffles
