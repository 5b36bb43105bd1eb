#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amicus/arith.hpp"

namespace amicus {

struct SearchOptions {
    /// Candidates above this value are rejected instead of primality-tested.
    /// The default is effectively unlimited; euler_table_limit() reproduces
    /// the classical prime-table cutoff and with it the historical stopping
    /// points of the searches.
    u128 prime_limit = default_prime_limit();
    std::size_t max_divisor_pairs = static_cast<std::size_t>(-1);
    bool emit_trace = true;   // keep rejected candidates in the outcome list
    unsigned threads = 0;     // 0 = AMICUS_THREADS env var, else hardware

    static u128 default_prime_limit() { return static_cast<u128>(1) << 63; }
    static u128 euler_table_limit() { return 100000; }
};

/// One row of a search: the resolution tried, the derived values, and either
/// the amicable pair it produced or why it was rejected.
struct SearchOutcome {
    std::vector<std::pair<std::string, u128>> candidate;
    std::vector<std::pair<std::string, u128>> derived;
    std::optional<AmicablePair> pair;
    std::string rejection;

    bool success() const { return pair.has_value(); }
    u128 derived_value(const std::string& name) const;
};

/// Successes only, in candidate order.
std::vector<AmicablePair> successes(const std::vector<SearchOutcome>& outcomes);

}  // namespace amicus
