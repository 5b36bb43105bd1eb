#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace amicus {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// A broken internal invariant (a constructed pair failing its own check, a
/// certificate contradicting the primality test).  Distinct from domain
/// errors so the CLI can exit 2 instead of 1.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All arithmetic on search intermediates goes through these checked helpers;
// an overflow of the 128-bit width is reported, never wrapped.
inline u128 checked_add(u128 a, u128 b) {
    u128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("amicus: 128-bit addition overflow");
    return r;
}

inline u128 checked_sub(u128 a, u128 b) {
    if (b > a) throw std::overflow_error("amicus: 128-bit subtraction underflow");
    return a - b;
}

inline u128 checked_mul(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("amicus: 128-bit multiplication overflow");
    return r;
}

inline u128 checked_pow(u128 base, unsigned exp) {
    u128 r = 1;
    while (exp) {
        if (exp & 1) r = checked_mul(r, base);
        exp >>= 1;
        if (exp) base = checked_mul(base, base);
    }
    return r;
}

u128 gcd_u128(u128 a, u128 b);
u128 isqrt_u128(u128 n);

std::string to_string(u128 v);

// Accepts plain decimal ("360"); throws std::invalid_argument on garbage,
// std::overflow_error past 2^128.
u128 parse_u128(std::string_view s);

}  // namespace amicus
