#pragma once

#include <vector>

#include "amicus/search.hpp"

namespace amicus {

struct ChainLimits {
    unsigned max_depth = 12;                      // prime powers committed to z
    u128 max_value = static_cast<u128>(1) << 63;  // cap on z itself
};

struct SolveResult {
    std::vector<FactoredInteger> solutions;  // ascending by value
    bool truncated = false;                  // a live branch hit a limit
};

/// All z with z * s = sigma(z) * r (after reduction) and z coprime to every
/// forbidden prime, found by peeling prime powers off the numerator:
/// if s < sigma(r) there is no solution, s = sigma(r) forces z = r, and
/// otherwise z = A^(alpha+nu) * P for the largest prime A with A^alpha || r,
/// recursing on P / sigma(P).
SolveResult solve_sigma_ratio(u128 r, u128 s, const std::vector<u128>& forbidden_primes,
                              const ChainLimits& limits = {});

/// Pairs z*a*p / z*b*q where only the cofactors a, b are given (they must be
/// coprime; fold any shared part into the forbidden primes of a custom solve
/// call instead).  For each x <= x_max with p = n*x - 1 and q = m*x - 1 prime
/// (m : n = sigma(a) : sigma(b) reduced), the common factor z must satisfy
/// z / sigma(z) = n*x*sigma(a) / ((n*a + m*b)*x - a - b); all chain solutions
/// are returned, each re-verified.
std::vector<SearchOutcome> search_problem5(const FactoredInteger& a, const FactoredInteger& b,
                                           u128 x_max, const SearchOptions& opts = {},
                                           const ChainLimits& limits = {});

}  // namespace amicus
