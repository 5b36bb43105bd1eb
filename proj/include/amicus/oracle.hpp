#pragma once

#include <cstdint>
#include <vector>

#include "amicus/ints.hpp"

namespace amicus {

/// Dense sigma values for 1..limit, built by divisor accumulation; shares no
/// code with the factorizer on purpose, so the two can check each other.
struct SigmaTable {
    u64 limit = 0;
    std::vector<u64> values;  // values[n] = sigma(n); index 0 unused

    u64 at(u64 n) const { return values[n]; }
};

/// 2 <= limit <= 1e8 (memory bound); std::length_error past that.
SigmaTable sigma_sieve(u64 limit);

struct OraclePair {
    u64 m = 0;
    u64 n = 0;
    u64 sigma = 0;
};

/// All pairs m < n <= limit with sigma(m) = sigma(n) = m + n, sorted by m.
std::vector<OraclePair> enumerate_amicable(u64 limit);
std::vector<OraclePair> enumerate_amicable(const SigmaTable& table);

}  // namespace amicus
