#include "amicus/certificates.hpp"

#include <stdexcept>

#include "amicus/arith.hpp"

namespace amicus {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::ProvedPrime: return "proved-prime";
        case Verdict::ProvedComposite: return "proved-composite";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<QfRepresentation> representations_2aabb(u64 n) {
    if (n == 0) throw std::domain_error("amicus: certificate target must be positive");
    std::vector<QfRepresentation> out;
    for (u64 a = 0; 2 * static_cast<u128>(a) * a <= n; ++a) {
        u64 rest = n - static_cast<u64>(2 * static_cast<u128>(a) * a);
        u64 b = static_cast<u64>(isqrt_u128(rest));
        if (b * static_cast<u128>(b) == rest) out.push_back({a, b});
    }
    return out;
}

Certificate certify_prime(u64 n) {
    if (n < 3 || n % 2 == 0)
        throw std::domain_error("amicus: certify_prime needs an odd target >= 3");
    Certificate cert;
    cert.target = n;
    cert.representations = representations_2aabb(n);
    cert.residue_class = static_cast<unsigned>(n % 8);
    cert.crosscheck = is_prime(n);

    std::size_t coprime = 0;
    for (const auto& rep : cert.representations)
        if (gcd_u128(rep.a, rep.b) == 1) ++coprime;

    // A representation with gcd(a, b) > 1 never counts toward uniqueness, and
    // only residues 1 and 3 mod 8 are representable by the form at all.
    if (cert.representations.size() >= 2) {
        cert.verdict = Verdict::ProvedComposite;
    } else if (cert.representations.size() == 1 && coprime == 1 &&
               (cert.residue_class == 1 || cert.residue_class == 3)) {
        cert.verdict = Verdict::ProvedPrime;
    } else {
        cert.verdict = Verdict::Inconclusive;
    }

    if ((cert.verdict == Verdict::ProvedPrime && !cert.crosscheck) ||
        (cert.verdict == Verdict::ProvedComposite && cert.crosscheck)) {
        throw internal_error("amicus: certificate verdict contradicts is_prime for n = " +
                               std::to_string(n));
    }
    return cert;
}

}  // namespace amicus
