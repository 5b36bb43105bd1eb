#include "amicus/chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "amicus/parallel.hpp"

namespace amicus {
namespace {

// Targets beyond this girth cannot produce a z under any default cap; treating
// them as truncation keeps checked multiplies from throwing deep in a branch.
const u128 kTargetCeiling = static_cast<u128>(1) << 100;

struct Solver {
    const std::vector<u128>& forbidden;
    const ChainLimits& limits;
    std::vector<FactoredInteger> solutions;
    bool truncated = false;

    void run(u128 r, u128 s, unsigned depth, const FactoredInteger& committed,
             const std::vector<u128>& excluded) {
        u128 g = gcd_u128(r, s);
        r /= g;
        s /= g;
        if (r > kTargetCeiling || s > kTargetCeiling) {
            truncated = true;
            return;
        }
        if (r > s) return;  // sigma(P) >= P rules the target out before factoring
        // sigma(P)/P stays below 9 for every P that fits 128 bits, so steeper
        // targets have no solution under any cap
        if (r <= kTargetCeiling / 9 && s > 9 * r) return;
        // r divides every solution, so a forbidden or already-committed prime
        // in r kills the branch outright.
        for (u128 f : forbidden)
            if (r % f == 0) return;
        for (u128 f : excluded)
            if (r % f == 0) return;
        FactoredInteger rf = FactoredInteger::of(r);
        u128 sr = sigma(rf);
        if (s < sr) return;  // impossible: sigma grows at least as fast as any multiple
        if (s == sr) {
            // z = r is forced: sigma(k r) > k sigma(r) rules out every multiple.
            u128 zval;
            if (__builtin_mul_overflow(committed.value(), r, &zval) || zval > limits.max_value) {
                truncated = true;
                return;
            }
            solutions.push_back(committed.times(rf));
            return;
        }
        if (depth >= limits.max_depth) {
            truncated = true;
            return;
        }
        // The numerator names the prime to peel.  A bare target 1/s asks for
        // sigma(z) = s z; every known solution of that is even, so branch on
        // 2 there (the odd side stays unexplored and is flagged truncated).
        PrimePower top{2, 0};
        u128 rest = 1;
        unsigned nu_start = 1;
        if (rf.is_one()) {
            for (u128 f : forbidden)
                if (f == 2) return;
            for (u128 f : excluded)
                if (f == 2) return;
            truncated = true;
        } else {
            top = rf.factors().back();  // largest prime first
            rest = r / checked_pow(top.prime, top.exponent);
            nu_start = 0;
        }
        std::vector<u128> next_excluded = excluded;
        next_excluded.push_back(top.prime);
        u128 apow = checked_pow(top.prime, top.exponent + nu_start);
        u128 anu = checked_pow(top.prime, nu_start);
        for (unsigned nu = nu_start;; ++nu) {
            u128 committed_value;
            if (__builtin_mul_overflow(committed.value(), apow, &committed_value) ||
                committed_value > limits.max_value) {
                truncated = true;
                break;
            }
            u128 sigma_apow = checked_sub(checked_mul(apow, top.prime), 1) / (top.prime - 1);
            u128 num, den;
            if (__builtin_mul_overflow(rest, sigma_apow, &num) ||
                __builtin_mul_overflow(anu, s, &den)) {
                truncated = true;
                break;
            }
            // the target ratio rises strictly with nu; past 1 nothing can follow
            if (num > den) break;
            run(num, den, depth + 1, committed.times_prime(top.prime, top.exponent + nu),
                next_excluded);
            anu = checked_mul(anu, top.prime);
            apow = checked_mul(apow, top.prime);
        }
    }
};

}  // namespace

SolveResult solve_sigma_ratio(u128 r, u128 s, const std::vector<u128>& forbidden_primes,
                              const ChainLimits& limits) {
    if (r == 0 || s == 0) throw std::domain_error("amicus: sigma-ratio parts must be positive");
    Solver solver{forbidden_primes, limits, {}, false};
    solver.run(r, s, 0, FactoredInteger(), {});
    std::sort(solver.solutions.begin(), solver.solutions.end());
    return SolveResult{std::move(solver.solutions), solver.truncated};
}

std::vector<SearchOutcome> search_problem5(const FactoredInteger& a, const FactoredInteger& b,
                                           u128 x_max, const SearchOptions& opts,
                                           const ChainLimits& limits) {
    if (!a.coprime_with(b))
        throw std::domain_error("amicus: problem5 cofactors must be coprime");
    if (x_max < 2) throw std::domain_error("amicus: x_max must be at least 2");
    Ratio mn(sigma(a), sigma(b));
    const u128 m = mn.num, n = mn.den;
    std::vector<u128> base_forbidden;
    for (const auto& pp : a.factors()) base_forbidden.push_back(pp.prime);
    for (const auto& pp : b.factors()) base_forbidden.push_back(pp.prime);
    Provenance prov{"problem5", "a=" + a.to_string() + ",b=" + b.to_string()};

    const std::size_t count = static_cast<std::size_t>(x_max - 1);
    std::vector<std::vector<SearchOutcome>> slots(count);
    parallel_for(count, opts.threads, [&](std::size_t i) {
        const u128 x = static_cast<u128>(i) + 2;
        SearchOutcome row;
        row.candidate = {{"x", x}};
        u128 p = checked_mul(n, x) - 1;
        u128 q = checked_mul(m, x) - 1;
        row.derived = {{"p", p}, {"q", q}};
        auto reject = [&](std::string why) {
            row.rejection = std::move(why);
            if (opts.emit_trace) slots[i].push_back(std::move(row));
        };
        if (p < 2 || q < 2 || p == q) return reject("degenerate p, q");
        if (p > opts.prime_limit || q > opts.prime_limit)
            return reject("p or q exceeds the prime limit");
        if (!is_prime_u128(p))
            return reject("p = " + to_string(p) + " = " + FactoredInteger::of(p).to_string() +
                          " is not prime");
        if (!is_prime_u128(q))
            return reject("q = " + to_string(q) + " = " + FactoredInteger::of(q).to_string() +
                          " is not prime");
        if (a.value() % p == 0 || b.value() % p == 0 || a.value() % q == 0 || b.value() % q == 0)
            return reject("p or q divides a cofactor");
        u128 num = checked_mul(checked_mul(n, x), sigma(a));
        u128 den = checked_sub(
            checked_mul(checked_add(checked_mul(n, a.value()), checked_mul(m, b.value())), x),
            checked_add(a.value(), b.value()));
        Ratio target(num, den);
        row.derived.emplace_back("r", target.num);
        row.derived.emplace_back("s", target.den);
        std::vector<u128> forbidden = base_forbidden;
        forbidden.push_back(p);
        forbidden.push_back(q);
        SolveResult zs = solve_sigma_ratio(target.num, target.den, forbidden, limits);
        if (zs.solutions.empty()) {
            return reject(std::string("no common factor z satisfies z/sigma(z) = ") +
                          to_string(target.num) + "/" + to_string(target.den) +
                          (zs.truncated ? " (search truncated at the chain limits)" : ""));
        }
        for (const FactoredInteger& z : zs.solutions) {
            SearchOutcome hit = row;
            hit.candidate.emplace_back("z", z.value());
            FactoredInteger mm = z.times(a).times_prime(p);
            FactoredInteger nn = z.times(b).times_prime(q);
            if (!is_amicable(mm.value(), nn.value()))
                throw internal_error("amicus: chain solution fails the amicability check at x = " +
                                       to_string(x));
            hit.pair = AmicablePair{mm, nn, sigma(mm), prov};
            slots[i].push_back(std::move(hit));
        }
    });

    std::vector<SearchOutcome> out;
    for (auto& slot : slots)
        for (auto& row : slot) out.push_back(std::move(row));
    return out;
}

}  // namespace amicus
