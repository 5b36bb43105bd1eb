#pragma once

#include <vector>

#include "amicus/search.hpp"

namespace amicus {

/// Amicable pairs a*p*q / a*r for a given deficient common factor a: resolve
/// b^2 into (d1, d2), require c | d1+b and c | d2+b, and test x-1, y-1, xy-1
/// for primality.
std::vector<SearchOutcome> search_problem1(const FactoredInteger& a, const SearchOptions& opts = {});

/// The power-of-two rule: for each (m, k) the three closed-form candidates
/// p = 2^m(1+2^k)-1, q = 2^m(2^2k+2^k)-1, r = 2^2m(2^(2k+1)+2^3k+2^k)-1 must
/// be prime; the pair is then 2^(m+k) p q / 2^(m+k) r.  k = 1 is the rule of
/// Thabit and Descartes.  Multiples of three among the r are rejected
/// structurally, without a primality test.
std::vector<SearchOutcome> search_thabit_rule(unsigned m_lo, unsigned m_hi, unsigned k_lo,
                                              unsigned k_hi, const SearchOptions& opts = {});

/// Pairs a*p*q / a*r*s with split ratio alpha:beta: resolve
/// b^2(alpha+beta)^2 - 2bc*alpha*beta into (P, Q).
std::vector<SearchOutcome> search_problem2(const FactoredInteger& a, u64 alpha, u64 beta,
                                           const SearchOptions& opts = {});

/// Pairs a*p*q / a*f*r with a given (possibly composite) cofactor f,
/// gcd(a, f) = 1: with e = b*f - (b-c)*sigma(f) and
/// L = b^2*sigma(f) + b*e*(f-1), resolve L*sigma(f) into (M, N); then
/// p = (M + b*sigma(f))/e - 1, q likewise, and sigma(f)*(r+1) = (p+1)(q+1).
/// e <= 0 is reported as a single structural rejection.
std::vector<SearchOutcome> search_problem3(const FactoredInteger& a, const FactoredInteger& f,
                                           const SearchOptions& opts = {});

/// Largest prime f for which (e-b)^2 (f+1) < b^2(f+1) + b*e*(f-1) with
/// e = c*f + c - b.  For prime cofactors above this bound a search with f
/// smallest among {f, p, q, r} is provably fruitless.
u128 problem3_f_bound(const FactoredInteger& a);

/// Pairs a*g*p*q / a*h*r with both cofactors given.
std::vector<SearchOutcome> search_problem4(const FactoredInteger& a, const FactoredInteger& g,
                                           const FactoredInteger& h, const SearchOptions& opts = {});

/// Convenience form g = k*m - 1, h = k*n - 1 (both must be prime).
std::vector<SearchOutcome> search_problem4_k(const FactoredInteger& a, u64 k, u64 m, u64 n,
                                             const SearchOptions& opts = {});

struct SuggestParams {
    unsigned rule2_max_n = 8;          // a = 2^n (2^(n+1) + 2^k - 1), k <= n
    unsigned rule3_max_k = 8;          // same shape with k > n
    std::vector<unsigned> rule4_n = {1, 2, 3};
    std::vector<u64> rule4_d = {4, 8, 16};
    bool include_rule5_list = true;
};

/// Candidate common factors for search_problem1, generated the way the
/// classical rules pick them: powers of two are implicit (pass 2^n yourself);
/// rules 2/3 give 2^n f with f = 2^(n+1) + 2^k - 1 prime; rule 4 solves
/// (g - 2^(n+1))(h - 2^(n+1)) = d - 2^(n+1) + 2^(2n+2) with g-1, h-1 prime;
/// rule 5 is an explicit list of odd multiples of 3^2 and 3^3.
std::vector<FactoredInteger> suggest_common_factors(const SuggestParams& params = {});

}  // namespace amicus
