#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amicus/ints.hpp"

namespace amicus {

struct PrimePower {
    u128 prime = 2;
    unsigned exponent = 1;

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
};

/// A positive integer held as its canonical prime factorization together with
/// the expanded value.  1 is the empty factorization.
class FactoredInteger {
public:
    FactoredInteger() = default;  // the integer 1

    /// Factor a positive integer (trial division by sieved primes, then a
    /// deterministic compositeness test with a rho split for large cofactors).
    static FactoredInteger of(u128 n);

    /// Build from explicit (prime, exponent) pairs; merges repeats, sorts,
    /// checks primality of every base and that the product fits 128 bits.
    static FactoredInteger from_factors(std::vector<PrimePower> factors);

    u128 value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    bool is_one() const { return factors_.empty(); }
    unsigned exponent_of(u128 prime) const;
    bool coprime_with(const FactoredInteger& other) const;

    /// Product with another factored integer (shared primes add exponents).
    FactoredInteger times(const FactoredInteger& other) const;
    FactoredInteger times_prime(u128 prime, unsigned exponent = 1) const;

    /// Canonical rendering, e.g. "2^3*3^2*5"; "1" for the empty product.
    std::string to_string() const;

    friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) {
        return a.value_ == b.value_;
    }
    friend bool operator<(const FactoredInteger& a, const FactoredInteger& b) {
        return a.value_ < b.value_;
    }

private:
    std::vector<PrimePower> factors_;
    u128 value_ = 1;
};

/// A fraction of positive integers kept in lowest terms at all times.
struct Ratio {
    u128 num = 1;
    u128 den = 1;

    Ratio() = default;
    Ratio(u128 n, u128 d);

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num == b.num && a.den == b.den;
    }
};

struct Provenance {
    std::string method;
    std::string params;
};

/// Two distinct numbers with sigma(m) = sigma(n) = m + n.
struct AmicablePair {
    FactoredInteger m;
    FactoredInteger n;
    u128 sigma = 0;
    Provenance provenance;
};

/// Sum of all divisors.  sigma(1) = 1.
u128 sigma(u128 n);
u128 sigma(const FactoredInteger& n);

/// sigma(n) in factored form, as the classical tables print it.
FactoredInteger sigma_factored(const FactoredInteger& n);

/// sigma(n) - n.
u128 aliquot_sum(u128 n);

/// Deterministic for the whole 64-bit range; n <= 1 is not prime.
bool is_prime(u64 n);

/// Deterministic well beyond 128-bit search intermediates (fixed witness set,
/// exact for n < 3.317e24); used for factoring fallbacks.
bool is_prime_u128(u128 n);

bool is_perfect(u128 n);

/// true iff m != n and sigma(m) = sigma(n) = m + n.  A perfect number paired
/// with itself is rejected here; ask is_perfect for that case.
bool is_amicable(u128 m, u128 n);

/// The fraction b/c = a / (2a - sigma(a)) in lowest terms; the engine behind
/// every given-common-factor search.  Throws std::domain_error unless a is
/// deficient.
Ratio reduce_sigma_ratio(const FactoredInteger& a);

/// All of n's divisors, ascending.
std::vector<u128> divisors(const FactoredInteger& n);

/// Every (d1, d2) with d1*d2 = n and d1 <= d2, ascending in d1.
std::vector<std::pair<u128, u128>> divisor_pairs(const FactoredInteger& n);

/// Shared read-only sieve of the primes below one million.
const std::vector<std::uint32_t>& small_primes();

/// Parse "2620", "2^2*5*131" or "2^2 * 5 * 131" into a factored integer.
FactoredInteger parse_factored(std::string_view text);

}  // namespace amicus
