#include "amicus/ints.hpp"

namespace amicus {

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 isqrt_u128(u128 n) {
    if (n == 0) return 0;
    u128 x = n;
    u128 y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n && x + 1 != 0) ++x;
    return x;
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int i = 40;
    while (v != 0) {
        buf[--i] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 40);
}

u128 parse_u128(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("amicus: empty integer literal");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("amicus: bad integer literal '" + std::string(s) + "'");
        v = checked_add(checked_mul(v, 10), static_cast<u128>(c - '0'));
    }
    return v;
}

}  // namespace amicus
