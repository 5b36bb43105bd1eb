#include "amicus/arith.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace amicus {
namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

std::vector<std::uint32_t> build_sieve() {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> primes;
    primes.reserve(80000);
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kSieveLimit; j += i)
                composite[j] = true;
        }
    }
    return primes;
}

u64 mulmod64(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

// 128-bit modular product by shift-and-add; slow but exact, only reached by
// cofactors that survive trial division past 64 bits.
u128 mulmod128(u128 a, u128 b, u128 m) {
    a %= m;
    u128 r = 0;
    while (b) {
        if (b & 1) {
            r += a;
            if (r >= m || r < a) r -= m;
        }
        u128 a2 = a + a;
        if (a2 >= m || a2 < a) a2 -= m;
        a = a2;
        b >>= 1;
    }
    return r;
}

u128 powmod128(u128 a, u128 e, u128 m) {
    u128 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod128(r, a, m);
        a = mulmod128(a, a, m);
        e >>= 1;
    }
    return r;
}

template <typename U, U (*Mul)(U, U, U), U (*Pow)(U, U, U)>
bool miller_rabin(U n, U a) {
    if (a % n == 0) return true;
    U d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    U x = Pow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = Mul(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// First thirteen primes: a deterministic witness set for all n < 3.317e24.
constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

template <typename U, U (*Mul)(U, U, U)>
U pollard_rho(U n) {
    // Brent's cycle variant; n is odd, composite, and not a perfect square.
    for (U c = 1;; ++c) {
        U x = 2, y = 2, d = 1;
        U saved = 1;
        int count = 0;
        auto step = [&](U v) { return (Mul(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            U diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            saved = Mul(saved, diff, n);
            if (++count == 64) {
                d = gcd_u128(saved, n);
                saved = 1;
                count = 0;
            }
        }
        if (d == 1 && count) d = gcd_u128(saved, n);
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(u128 n, std::vector<u128>& out) {
    if (n == 1) return;
    if (is_prime_u128(n)) {
        out.push_back(n);
        return;
    }
    u128 root = isqrt_u128(n);
    if (root * root == n) {
        factor_rec(root, out);
        factor_rec(root, out);
        return;
    }
    u128 d = n <= ~static_cast<u64>(0)
                 ? pollard_rho<u64, mulmod64>(static_cast<u64>(n))
                 : pollard_rho<u128, mulmod128>(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

// Trial division only has to clear the way for the rho split, so it stops
// early; everything below the square of the bound is then settled.
constexpr u128 kTrialBound = 1024;

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = build_sieve();
    return primes;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 a : kWitnesses)
        if (!miller_rabin<u64, mulmod64, powmod64>(n, a)) return false;
    return true;
}

bool is_prime_u128(u128 n) {
    if (n <= ~static_cast<u64>(0)) return is_prime(static_cast<u64>(n));
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return false;
    }
    for (u64 a : kWitnesses)
        if (!miller_rabin<u128, mulmod128, powmod128>(n, a)) return false;
    return true;
}

FactoredInteger FactoredInteger::of(u128 n) {
    if (n == 0) throw std::domain_error("amicus: cannot factor zero");
    FactoredInteger out;
    out.value_ = n;
    for (std::uint32_t p : small_primes()) {
        if (p > kTrialBound || static_cast<u128>(p) * p > n) break;
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.factors_.push_back({p, e});
        }
    }
    if (n > 1 && n <= kTrialBound * kTrialBound) {
        // no factor below the bound survived, so the cofactor is prime
        out.factors_.push_back({n, 1});
        n = 1;
    }
    if (n > 1) {
        std::vector<u128> rest;
        factor_rec(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            out.factors_.push_back({rest[i], static_cast<unsigned>(j - i)});
            i = j;
        }
    }
    return out;
}

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    FactoredInteger out;
    for (const auto& pp : factors) {
        if (pp.exponent == 0) continue;
        if (!is_prime_u128(pp.prime))
            throw std::domain_error("amicus: base " + amicus::to_string(pp.prime) + " is not prime");
        if (!out.factors_.empty() && out.factors_.back().prime == pp.prime)
            out.factors_.back().exponent += pp.exponent;
        else
            out.factors_.push_back(pp);
        out.value_ = checked_mul(out.value_, checked_pow(pp.prime, pp.exponent));
    }
    return out;
}

unsigned FactoredInteger::exponent_of(u128 prime) const {
    for (const auto& pp : factors_)
        if (pp.prime == prime) return pp.exponent;
    return 0;
}

bool FactoredInteger::coprime_with(const FactoredInteger& other) const {
    for (const auto& pp : factors_)
        if (other.exponent_of(pp.prime) != 0) return false;
    return true;
}

FactoredInteger FactoredInteger::times(const FactoredInteger& other) const {
    FactoredInteger out;
    out.value_ = checked_mul(value_, other.value_);
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->prime < a->prime) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.push_back({a->prime, a->exponent + b->exponent});
            ++a;
            ++b;
        }
    }
    return out;
}

FactoredInteger FactoredInteger::times_prime(u128 prime, unsigned exponent) const {
    FactoredInteger other;
    other.factors_.push_back({prime, exponent});
    other.value_ = checked_pow(prime, exponent);
    return times(other);
}

std::string FactoredInteger::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& pp : factors_) {
        if (!out.empty()) out += '*';
        out += amicus::to_string(pp.prime);
        if (pp.exponent > 1) {
            out += '^';
            out += std::to_string(pp.exponent);
        }
    }
    return out;
}

Ratio::Ratio(u128 n, u128 d) {
    if (n == 0 || d == 0) throw std::domain_error("amicus: ratio parts must be positive");
    u128 g = gcd_u128(n, d);
    num = n / g;
    den = d / g;
}

u128 sigma(const FactoredInteger& n) {
    u128 out = 1;
    for (const auto& pp : n.factors()) {
        // (p^(e+1) - 1) / (p - 1), accumulated without overflow surprises
        u128 term = checked_sub(checked_pow(pp.prime, pp.exponent + 1), 1) / (pp.prime - 1);
        out = checked_mul(out, term);
    }
    return out;
}

u128 sigma(u128 n) { return sigma(FactoredInteger::of(n)); }

FactoredInteger sigma_factored(const FactoredInteger& n) {
    FactoredInteger out;
    for (const auto& pp : n.factors())
        out = out.times(FactoredInteger::of(checked_sub(checked_pow(pp.prime, pp.exponent + 1), 1) / (pp.prime - 1)));
    return out;
}

u128 aliquot_sum(u128 n) { return sigma(n) - n; }

bool is_perfect(u128 n) { return sigma(n) == checked_mul(2, n); }

bool is_amicable(u128 m, u128 n) {
    if (m == n) return false;
    u128 total = checked_add(m, n);
    return sigma(m) == total && sigma(n) == total;
}

Ratio reduce_sigma_ratio(const FactoredInteger& a) {
    u128 twice = checked_mul(2, a.value());
    u128 s = sigma(a);
    if (twice <= s)
        throw std::domain_error("amicus: " + a.to_string() + " is not deficient (2a <= sigma(a))");
    return Ratio(a.value(), twice - s);
}

std::vector<u128> divisors(const FactoredInteger& n) {
    std::vector<u128> out{1};
    for (const auto& pp : n.factors()) {
        std::size_t old = out.size();
        u128 power = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            power = checked_mul(power, pp.prime);
            for (std::size_t i = 0; i < old; ++i) out.push_back(checked_mul(out[i], power));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<u128, u128>> divisor_pairs(const FactoredInteger& n) {
    std::vector<std::pair<u128, u128>> out;
    for (u128 d : divisors(n)) {
        u128 other = n.value() / d;
        if (d > other) break;
        out.emplace_back(d, other);
    }
    return out;
}

FactoredInteger parse_factored(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
    if (cleaned.empty()) throw std::invalid_argument("amicus: empty number");
    if (cleaned.find_first_of("*^") == std::string::npos) return FactoredInteger::of(parse_u128(cleaned));
    u128 value = 1;
    std::size_t pos = 0;
    while (pos < cleaned.size()) {
        std::size_t star = cleaned.find('*', pos);
        std::string term = cleaned.substr(pos, star == std::string::npos ? star : star - pos);
        std::size_t caret = term.find('^');
        u128 base = parse_u128(caret == std::string::npos ? term : term.substr(0, caret));
        u128 exp = caret == std::string::npos ? 1 : parse_u128(term.substr(caret + 1));
        if (exp > 200) throw std::invalid_argument("amicus: exponent out of range");
        value = checked_mul(value, checked_pow(base, static_cast<unsigned>(exp)));
        pos = star == std::string::npos ? cleaned.size() : star + 1;
    }
    return FactoredInteger::of(value);
}

}  // namespace amicus
