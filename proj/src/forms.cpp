#include "amicus/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace amicus {
namespace {

std::string describe_composite(u128 v) {
    return to_string(v) + " = " + FactoredInteger::of(v).to_string();
}

/// Primality gate shared by all form searches: enforces the prime limit,
/// and on a composite records its factorization in the rejection text.
bool gate_prime(const char* name, u128 v, const SearchOptions& opts, SearchOutcome& row) {
    if (v < 2) {
        row.rejection = std::string(name) + " = " + to_string(v) + " is not prime";
        return false;
    }
    if (v > opts.prime_limit) {
        row.rejection = std::string(name) + " = " + to_string(v) + " exceeds the prime limit " +
                        to_string(opts.prime_limit);
        return false;
    }
    if (!is_prime_u128(v)) {
        row.rejection = std::string(name) + " = " + describe_composite(v) + " is not prime";
        return false;
    }
    return true;
}

bool gate_coprime_to(const char* name, u128 v, const FactoredInteger& a, SearchOutcome& row) {
    if (a.value() % v == 0) {
        row.rejection = std::string(name) + " = " + to_string(v) + " divides the common factor " +
                        a.to_string();
        return false;
    }
    return true;
}

void keep(std::vector<SearchOutcome>& out, SearchOutcome row, const SearchOptions& opts) {
    if (row.success() || opts.emit_trace) out.push_back(std::move(row));
}

AmicablePair make_pair_checked(FactoredInteger m, FactoredInteger n, Provenance prov) {
    // Re-verified from scratch; a construction that fails here is a bug.
    if (!is_amicable(m.value(), n.value()))
        throw internal_error("amicus: constructed pair fails the amicability check: " +
                               m.to_string() + " / " + n.to_string());
    AmicablePair pair;
    pair.sigma = sigma(m);
    pair.m = std::move(m);
    pair.n = std::move(n);
    pair.provenance = std::move(prov);
    return pair;
}

}  // namespace

u128 SearchOutcome::derived_value(const std::string& name) const {
    for (const auto& [k, v] : derived)
        if (k == name) return v;
    throw std::out_of_range("amicus: no derived value named " + name);
}

std::vector<AmicablePair> successes(const std::vector<SearchOutcome>& outcomes) {
    std::vector<AmicablePair> out;
    for (const auto& o : outcomes)
        if (o.pair) out.push_back(*o.pair);
    return out;
}

std::vector<SearchOutcome> search_problem1(const FactoredInteger& a, const SearchOptions& opts) {
    Ratio bc = reduce_sigma_ratio(a);
    const u128 b = bc.num, c = bc.den;
    Provenance prov{"problem1", "a=" + a.to_string()};
    std::vector<SearchOutcome> out;
    auto pairs = divisor_pairs(FactoredInteger::of(checked_mul(b, b)));
    if (pairs.size() > opts.max_divisor_pairs) pairs.resize(opts.max_divisor_pairs);
    for (const auto& [d1, d2] : pairs) {
        SearchOutcome row;
        row.candidate = {{"d1", d1}, {"d2", d2}};
        if ((d1 + b) % c != 0 || (d2 + b) % c != 0) {
            row.rejection = "c = " + to_string(c) + " does not divide both cofactors plus b";
            keep(out, std::move(row), opts);
            continue;
        }
        u128 x = (d1 + b) / c, y = (d2 + b) / c;
        u128 p = x - 1, q = y - 1, r = checked_mul(x, y) - 1;
        row.derived = {{"x", x}, {"y", y}, {"p", p}, {"q", q}, {"r", r}};
        if (p == q) {
            row.rejection = "p = q = " + to_string(p) + "; the primes must be distinct";
        } else if (gate_prime("p", p, opts, row) && gate_prime("q", q, opts, row) &&
                   gate_prime("r", r, opts, row) && gate_coprime_to("p", p, a, row) &&
                   gate_coprime_to("q", q, a, row) && gate_coprime_to("r", r, a, row)) {
            row.pair = make_pair_checked(a.times_prime(p).times_prime(q), a.times_prime(r), prov);
        }
        keep(out, std::move(row), opts);
    }
    return out;
}

std::vector<SearchOutcome> search_thabit_rule(unsigned m_lo, unsigned m_hi, unsigned k_lo,
                                              unsigned k_hi, const SearchOptions& opts) {
    if (m_lo < 1 || k_lo < 1 || m_hi < m_lo || k_hi < k_lo)
        throw std::domain_error("amicus: thabit ranges need 1 <= lo <= hi");
    std::vector<SearchOutcome> out;
    for (unsigned k = k_lo; k <= k_hi; ++k) {
        for (unsigned m = m_lo; m <= m_hi; ++m) {
            SearchOutcome row;
            row.candidate = {{"k", k}, {"m", m}};
            u128 pw = checked_pow(2, m);
            u128 p = checked_mul(pw, (static_cast<u128>(1) << k) + 1) - 1;
            u128 q = checked_mul(pw, checked_pow(2, 2 * k) + checked_pow(2, k)) - 1;
            u128 r = checked_mul(checked_pow(2, 2 * m),
                                 checked_pow(2, 2 * k + 1) + checked_pow(2, 3 * k) + checked_pow(2, k)) -
                     1;
            row.derived = {{"p", p}, {"q", q}, {"r", r}};
            if (r % 3 == 0 && r != 3) {
                // The k even cases die here for every m; no table lookup needed.
                row.rejection = "r = " + to_string(r) + " is divisible by 3";
            } else if (gate_prime("p", p, opts, row) && gate_prime("q", q, opts, row) &&
                       gate_prime("r", r, opts, row)) {
                FactoredInteger a = FactoredInteger().times_prime(2, m + k);
                row.pair = make_pair_checked(
                    a.times_prime(p).times_prime(q), a.times_prime(r),
                    {"thabit", "m=" + std::to_string(m) + ",k=" + std::to_string(k)});
            }
            keep(out, std::move(row), opts);
        }
    }
    return out;
}

std::vector<SearchOutcome> search_problem2(const FactoredInteger& a, u64 alpha, u64 beta,
                                           const SearchOptions& opts) {
    if (alpha == 0 || beta == 0 || alpha == beta)
        throw std::domain_error("amicus: problem2 needs distinct positive alpha, beta");
    Ratio bc = reduce_sigma_ratio(a);
    const u128 b = bc.num, c = bc.den;
    const u128 ab_sum = static_cast<u128>(alpha) + beta;
    const u128 constant = checked_sub(checked_mul(checked_mul(b, b), checked_mul(ab_sum, ab_sum)),
                                      checked_mul(2, checked_mul(checked_mul(b, c), checked_mul(alpha, beta))));
    const u128 den = checked_mul(c, checked_mul(alpha, beta));
    const u128 shift = checked_mul(b, ab_sum);
    Provenance prov{"problem2", "a=" + a.to_string() + ",alpha=" + std::to_string(alpha) +
                                    ",beta=" + std::to_string(beta)};
    std::vector<SearchOutcome> out;
    auto pairs = divisor_pairs(FactoredInteger::of(constant));
    if (pairs.size() > opts.max_divisor_pairs) pairs.resize(opts.max_divisor_pairs);
    for (const auto& [P, Q] : pairs) {
        SearchOutcome row;
        row.candidate = {{"P", P}, {"Q", Q}};
        if ((P + shift) % den != 0 || (Q + shift) % den != 0) {
            row.rejection = to_string(den) + " does not divide both factors plus " + to_string(shift);
            keep(out, std::move(row), opts);
            continue;
        }
        u128 x = (P + shift) / den, y = (Q + shift) / den;
        u128 p = checked_mul(alpha, x) - 1, q = checked_mul(beta, y) - 1;
        u128 r = checked_mul(beta, x) - 1, s = checked_mul(alpha, y) - 1;
        row.derived = {{"x", x}, {"y", y}, {"p", p}, {"q", q}, {"r", r}, {"s", s}};
        bool distinct = p != q && p != r && p != s && q != r && q != s && r != s;
        if (!distinct) {
            row.rejection = "p, q, r, s are not pairwise distinct";
        } else if (gate_prime("p", p, opts, row) && gate_prime("q", q, opts, row) &&
                   gate_prime("r", r, opts, row) && gate_prime("s", s, opts, row) &&
                   gate_coprime_to("p", p, a, row) && gate_coprime_to("q", q, a, row) &&
                   gate_coprime_to("r", r, a, row) && gate_coprime_to("s", s, a, row)) {
            row.pair = make_pair_checked(a.times_prime(p).times_prime(q),
                                         a.times_prime(r).times_prime(s), prov);
        }
        keep(out, std::move(row), opts);
    }
    return out;
}

std::vector<SearchOutcome> search_problem3(const FactoredInteger& a, const FactoredInteger& f,
                                           const SearchOptions& opts) {
    if (!a.coprime_with(f))
        throw std::domain_error("amicus: problem3 needs gcd(a, f) = 1");
    Ratio bc = reduce_sigma_ratio(a);
    const u128 b = bc.num, c = bc.den;
    const u128 sf = sigma(f);
    Provenance prov{"problem3", "a=" + a.to_string() + ",f=" + f.to_string()};
    std::vector<SearchOutcome> out;
    // e = b f - (b - c) sigma(f); nonpositive e kills the whole cofactor.
    u128 lhs = checked_mul(b, f.value());
    u128 rhs = checked_mul(b - c, sf);
    if (lhs <= rhs) {
        SearchOutcome row;
        row.candidate = {{"f", f.value()}};
        row.rejection = "e = b*f - (b-c)*sigma(f) = " + to_string(lhs) + " - " + to_string(rhs) +
                        " is not positive; nothing is obtained from this cofactor";
        keep(out, std::move(row), opts);
        return out;
    }
    const u128 e = lhs - rhs;
    const u128 L = checked_add(checked_mul(checked_mul(b, b), sf),
                               checked_mul(checked_mul(b, e), f.value() - 1));
    const u128 shift = checked_mul(b, sf);
    auto pairs = divisor_pairs(FactoredInteger::of(checked_mul(L, sf)));
    if (pairs.size() > opts.max_divisor_pairs) pairs.resize(opts.max_divisor_pairs);
    for (const auto& [M, N] : pairs) {
        SearchOutcome row;
        row.candidate = {{"M", M}, {"N", N}};
        if ((M + shift) % e != 0 || (N + shift) % e != 0) {
            row.rejection = "e = " + to_string(e) + " does not divide both factors plus b*sigma(f)";
            keep(out, std::move(row), opts);
            continue;
        }
        u128 p = (M + shift) / e - 1, q = (N + shift) / e - 1;
        row.derived = {{"p", p}, {"q", q}};
        if (p < 2 || q < 2) {
            row.rejection = "degenerate p or q";
            keep(out, std::move(row), opts);
            continue;
        }
        u128 product = checked_mul(p + 1, q + 1);
        if (product % sf != 0) {
            row.rejection = "sigma(f) = " + to_string(sf) + " does not divide (p+1)(q+1)";
            keep(out, std::move(row), opts);
            continue;
        }
        u128 r = product / sf - 1;
        row.derived.emplace_back("r", r);
        if (p == q || p == r || q == r) {
            row.rejection = "p, q, r are not pairwise distinct";
        } else if (gate_prime("p", p, opts, row) && gate_prime("q", q, opts, row) &&
                   gate_prime("r", r, opts, row) && gate_coprime_to("p", p, a, row) &&
                   gate_coprime_to("q", q, a, row) && gate_coprime_to("r", r, a, row)) {
            if (f.value() % r == 0 || f.exponent_of(r) != 0) {
                row.rejection = "r = " + to_string(r) + " shares a factor with f = " + f.to_string();
            } else {
                row.pair = make_pair_checked(a.times_prime(p).times_prime(q),
                                             a.times(f).times_prime(r), prov);
            }
        }
        keep(out, std::move(row), opts);
    }
    return out;
}

u128 problem3_f_bound(const FactoredInteger& a) {
    Ratio bc = reduce_sigma_ratio(a);
    const i128 b = static_cast<i128>(bc.num), c = static_cast<i128>(bc.den);
    u128 best = 0;
    for (std::uint32_t fp : small_primes()) {
        i128 f = fp;
        i128 e = c * f + c - b;
        i128 lhs = (e - b) * (e - b) * (f + 1);
        i128 rhs = b * b * (f + 1) + b * e * (f - 1);
        if (lhs < rhs)
            best = fp;
        else if (e > b)
            break;  // cubic left side has overtaken the quadratic right side for good
    }
    return best;
}

std::vector<SearchOutcome> search_problem4(const FactoredInteger& a, const FactoredInteger& g,
                                           const FactoredInteger& h, const SearchOptions& opts) {
    if (!a.coprime_with(g) || !a.coprime_with(h))
        throw std::domain_error("amicus: problem4 needs g and h coprime to a");
    Ratio bc = reduce_sigma_ratio(a);
    const u128 b = bc.num, c = bc.den;
    Ratio mn(sigma(g), sigma(h));
    const u128 m = mn.num, n = mn.den;
    Provenance prov{"problem4", "a=" + a.to_string() + ",g=" + g.to_string() + ",h=" + h.to_string()};
    std::vector<SearchOutcome> out;
    // e = b(mh + ng) - (2b - c) m sigma(h)
    u128 e_pos = checked_mul(b, checked_add(checked_mul(m, h.value()), checked_mul(n, g.value())));
    u128 e_neg = checked_mul(checked_sub(checked_mul(2, b), c), checked_mul(m, sigma(h)));
    SearchOutcome bad;
    bad.candidate = {{"g", g.value()}, {"h", h.value()}};
    if (e_pos <= e_neg) {
        bad.rejection = "e is not positive; nothing is obtained from these cofactors";
        keep(out, std::move(bad), opts);
        return out;
    }
    const u128 e = e_pos - e_neg;
    // MN = n^2 b^2 g^2 + n b (h - g) e, which may be negative when h < g.
    u128 base = checked_mul(checked_mul(n, n), checked_mul(checked_mul(b, b), checked_mul(g.value(), g.value())));
    u128 constant;
    if (h.value() >= g.value()) {
        constant = checked_add(base, checked_mul(checked_mul(n, b), checked_mul(h.value() - g.value(), e)));
    } else {
        u128 sub = checked_mul(checked_mul(n, b), checked_mul(g.value() - h.value(), e));
        if (sub >= base) {
            bad.rejection = "resolvable constant is not positive";
            keep(out, std::move(bad), opts);
            return out;
        }
        constant = base - sub;
    }
    const u128 shift = checked_mul(checked_mul(n, b), g.value());
    auto pairs = divisor_pairs(FactoredInteger::of(constant));
    if (pairs.size() > opts.max_divisor_pairs) pairs.resize(opts.max_divisor_pairs);
    for (const auto& [M, N] : pairs) {
        SearchOutcome row;
        row.candidate = {{"M", M}, {"N", N}};
        if ((M + shift) % e != 0 || (N + shift) % e != 0) {
            row.rejection = "e = " + to_string(e) + " does not divide both factors plus n*b*g";
            keep(out, std::move(row), opts);
            continue;
        }
        u128 x = (M + shift) / e, y = (N + shift) / e;
        u128 p = x - 1, q = y - 1;
        row.derived = {{"x", x}, {"y", y}, {"p", p}, {"q", q}};
        u128 mxy = checked_mul(m, checked_mul(x, y));
        if (mxy % n != 0) {
            row.rejection = "m*x*y is not divisible by n; r would not be an integer";
            keep(out, std::move(row), opts);
            continue;
        }
        u128 r = mxy / n - 1;
        row.derived.emplace_back("r", r);
        if (p == q || p == r || q == r) {
            row.rejection = "p, q, r are not pairwise distinct";
        } else if (gate_prime("p", p, opts, row) && gate_prime("q", q, opts, row) &&
                   gate_prime("r", r, opts, row) && gate_coprime_to("p", p, a, row) &&
                   gate_coprime_to("q", q, a, row) && gate_coprime_to("r", r, a, row)) {
            if (g.value() % p == 0 || g.value() % q == 0 || h.value() % r == 0) {
                row.rejection = "a derived prime divides its own cofactor";
            } else {
                row.pair = make_pair_checked(a.times(g).times_prime(p).times_prime(q),
                                             a.times(h).times_prime(r), prov);
            }
        }
        keep(out, std::move(row), opts);
    }
    return out;
}

std::vector<SearchOutcome> search_problem4_k(const FactoredInteger& a, u64 k, u64 m, u64 n,
                                             const SearchOptions& opts) {
    if (k < 2 || m == 0 || n == 0 || m == n)
        throw std::domain_error("amicus: problem4 k-form needs k >= 2 and distinct m, n");
    u128 g = static_cast<u128>(k) * m - 1;
    u128 h = static_cast<u128>(k) * n - 1;
    if (!is_prime_u128(g) || !is_prime_u128(h))
        throw std::domain_error("amicus: k-form cofactors k*m-1 = " + to_string(g) + " and k*n-1 = " +
                                to_string(h) + " must both be prime");
    return search_problem4(a, FactoredInteger::of(g), FactoredInteger::of(h), opts);
}

std::vector<FactoredInteger> suggest_common_factors(const SuggestParams& params) {
    std::vector<FactoredInteger> out;
    auto push = [&out](FactoredInteger a) {
        for (const auto& seen : out)
            if (seen == a) return;
        out.push_back(std::move(a));
    };
    // Rules 2 and 3: a = 2^n (2^(n+1) + 2^k - 1) with the odd part prime.
    for (unsigned n = 1; n <= params.rule2_max_n; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            u128 f = checked_pow(2, n + 1) + checked_pow(2, k) - 1;
            if (is_prime_u128(f)) push(FactoredInteger().times_prime(2, n).times_prime(f));
        }
    }
    for (unsigned k = 1; k <= params.rule3_max_k; ++k) {
        for (unsigned n = 1; n < k; ++n) {
            if (k - n >= n + 1) continue;  // the derivation needs m = k - n < n + 1
            u128 f = checked_pow(2, n + 1) + checked_pow(2, k) - 1;
            if (is_prime_u128(f)) push(FactoredInteger().times_prime(2, n).times_prime(f));
        }
    }
    // Rule 4: (g - 2^(n+1))(h - 2^(n+1)) = d - 2^(n+1) + 2^(2n+2), g-1 and h-1 prime.
    for (unsigned n : params.rule4_n) {
        u128 two_n1 = checked_pow(2, n + 1);
        for (u64 d : params.rule4_d) {
            u128 target = checked_add(d, checked_sub(checked_pow(2, 2 * n + 2), two_n1));
            for (const auto& [d1, d2] : divisor_pairs(FactoredInteger::of(target))) {
                if (d1 == d2) continue;
                u128 g = d1 + two_n1, h = d2 + two_n1;
                if (g < 2 || h < 2) continue;
                if (!is_prime_u128(g - 1) || !is_prime_u128(h - 1)) continue;
                push(FactoredInteger().times_prime(2, n).times_prime(g - 1).times_prime(h - 1));
            }
        }
    }
    if (params.include_rule5_list) {
        for (const char* s : {"3^2*5*13", "3^2*7*13", "3^2*7^2*13", "3^3*5", "3^2*5*13*19",
                              "3^2*7^2*13*19", "3^4*5*11", "3^2*7^2*11*13", "3^2*5*7"})
            push(parse_factored(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace amicus
