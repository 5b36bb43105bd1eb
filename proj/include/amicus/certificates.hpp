#pragma once

#include <string>
#include <vector>

#include "amicus/ints.hpp"

namespace amicus {

/// One way of writing the target as 2a^2 + b^2.
struct QfRepresentation {
    u64 a = 0;
    u64 b = 0;

    friend bool operator==(const QfRepresentation& x, const QfRepresentation& y) {
        return x.a == y.a && x.b == y.b;
    }
};

enum class Verdict { ProvedPrime, ProvedComposite, Inconclusive };

std::string to_string(Verdict v);

/// Primality evidence from the quadratic form 2a^2 + b^2: a unique coprime
/// representation proves an odd target prime, two or more representations
/// prove it composite, and no representation decides nothing.
struct Certificate {
    u64 target = 0;
    std::vector<QfRepresentation> representations;
    Verdict verdict = Verdict::Inconclusive;
    unsigned residue_class = 0;  // target mod 8
    bool crosscheck = false;     // is_prime(target)
};

/// All (a, b) with a, b >= 0 and 2a^2 + b^2 = n, ascending in a.
std::vector<QfRepresentation> representations_2aabb(u64 n);

/// Requires n >= 3 and odd (std::domain_error otherwise).  The verdict is
/// always cross-checked against is_prime; a disagreement would falsify the
/// implemented side conditions and raises internal_error.
Certificate certify_prime(u64 n);

}  // namespace amicus
