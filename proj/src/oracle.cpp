#include "amicus/oracle.hpp"

#include <stdexcept>

namespace amicus {

SigmaTable sigma_sieve(u64 limit) {
    if (limit < 2) throw std::domain_error("amicus: sieve limit must be at least 2");
    if (limit > 100'000'000) throw std::length_error("amicus: sieve limit above 1e8");
    SigmaTable table;
    table.limit = limit;
    table.values.assign(limit + 1, 0);
    for (u64 d = 1; d <= limit; ++d)
        for (u64 m = d; m <= limit; m += d) table.values[m] += d;
    return table;
}

std::vector<OraclePair> enumerate_amicable(const SigmaTable& table) {
    std::vector<OraclePair> out;
    for (u64 m = 2; m <= table.limit; ++m) {
        u64 s = table.values[m];
        if (s <= 2 * m) continue;  // the smaller member is abundant
        u64 n = s - m;
        if (n <= table.limit && table.values[n] == s) out.push_back({m, n, s});
    }
    return out;
}

std::vector<OraclePair> enumerate_amicable(u64 limit) {
    return enumerate_amicable(sigma_sieve(limit));
}

}  // namespace amicus
