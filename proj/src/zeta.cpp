#include "rootcong/zeta.hpp"

namespace rootcong {

namespace {

const MonicPoly& cube2() {
    static MonicPoly f({0, 0, -2});
    return f;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// 0, 1 or 3 degree-one primes above p, encoded by the splitting class
int local_count(PrimeClass cls, int a, int b) {
    switch (cls) {
        case PrimeClass::Ramified:
            return (a == 0 && b == 0) || (a == 1 && b == 0) || (a == 0 && b == 1) ? 1 : 0;
        case PrimeClass::Inert:
            return a == 0 && b == 0 ? 1 : 0;
        case PrimeClass::TotallySplit:
            return 1 + 2 * (a >= 1 ? 1 : 0) + 2 * (b >= 1 ? 1 : 0) +
                   ((a >= 1 && b >= 1) ? 1 : 0);
        case PrimeClass::PartialSplit:
            return (a == 0 || b == 0) ? 1 : 0;
    }
    return 0;
}

CotypeCounts enumerate_by_pairs(long long bound) {
    const MonicPoly& f = cube2();
    CotypeCounts counts;
    for (Int n3 = 1; n3 * n3 * n3 <= bound; ++n3) {
        Int n3cube = n3 * n3 * n3;
        for (Int m1 = 1; n3cube * m1 * m1 <= bound; ++m1)
            for (Int m2 = 1; n3cube * m1 * m1 * m2 <= bound; ++m2) {
                Int g = gcd(m1, m2), big = m1 * m2, step = big / g;
                for (const auto& r1 : roots_mod(f, m1))
                    for (const auto& r2 : roots_mod(f, m2)) {
                        Int lhs = mod_floor(r1.mu * r1.mu, m1);
                        Int rhs = mod_floor(-r2.mu * r2.mu - r1.mu * r2.mu, m2);
                        if (mod_floor(lhs - rhs, g) != 0) continue;
                        // glue entries solving both congruences, g of them
                        Int t = mod_floor((rhs - lhs) / g * inv_mod(m1 / g, m2 / g), m2 / g);
                        Int base = mod_floor(lhs + m1 * t, big);
                        for (Int k = 0; k < g; ++k) {
                            Int lambda = mod_floor(base + k * step, big);
                            IntMatrix raw(3, 3);
                            raw.at(0, 0) = 1;
                            raw.at(0, 1) = r1.mu + f.a(1);
                            raw.at(0, 2) = lambda;
                            raw.at(1, 1) = m1;
                            raw.at(1, 2) = -r2.mu * m1;
                            raw.at(2, 2) = big;
                            if (!is_ideal(f, hnf_upper(raw).h)) continue;
                            counts[{n3 * m1 * m2, n3 * m1, n3}] += 1;
                        }
                    }
            }
    }
    return counts;
}

CotypeCounts enumerate_by_hnf(long long bound) {
    const MonicPoly& f = cube2();
    CotypeCounts counts;
    for (long long n = 1; n <= bound; ++n)
        for (const auto& ideal : enumerate_ideals_of_norm_pruned(f, n)) {
            auto inv = invariant_factors(ideal);
            counts[{inv[0], inv[1], inv[2]}] += 1;
        }
    return counts;
}

} // namespace

PrimeClass classify_prime(const Int& p) {
    if (!is_prime(p)) throw not_prime(to_string(p) + " is not prime");
    if (p == 2 || p == 3) return PrimeClass::Ramified;
    if (p % 3 == 2) return PrimeClass::PartialSplit;
    for (Int y = 1; 27 * y * y < p; ++y) {
        Int rest = p - 27 * y * y;
        Int x = sqrt(rest);
        if (x * x == rest) return PrimeClass::TotallySplit;
    }
    return PrimeClass::Inert;
}

CotypeCounts enumerate_ideals_by_cotype(long long bound) {
    if (bound < 1) throw error("enumerate_ideals_by_cotype: bound must be positive");
    CotypeCounts counts = enumerate_by_pairs(bound);
    if (counts != enumerate_by_hnf(bound))
        throw error("pair-generated cotype counts disagree with exhaustive enumeration");
    return counts;
}

CotypeCounts euler_cotype_coefficients(long long bound) {
    if (bound < 1) throw error("euler_cotype_coefficients: bound must be positive");
    CotypeCounts acc;
    acc[{1, 1, 1}] = 1;
    for (Int p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        PrimeClass cls = classify_prime(p);
        std::vector<std::pair<Cotype, long long>> local;
        for (int c = 0;; ++c) {
            Int pc = pow(p, 3 * c);
            if (pc > bound) break;
            for (int b = 0;; ++b) {
                Int pbc = pc * pow(p, 2 * b);
                if (pbc > bound) break;
                for (int a = 0;; ++a) {
                    Int norm = pbc * pow(p, a);
                    if (norm > bound) break;
                    int n = local_count(cls, a, b);
                    if (n > 0)
                        local.push_back({{pow(p, a + b + c), pow(p, b + c), pow(p, c)}, n});
                }
            }
        }
        CotypeCounts next;
        for (const auto& [cot, cnt] : acc) {
            Int norm = cot.n1 * cot.n2 * cot.n3;
            for (const auto& [lc, ln] : local) {
                if (norm * lc.n1 * lc.n2 * lc.n3 > bound) continue;
                next[{cot.n1 * lc.n1, cot.n2 * lc.n2, cot.n3 * lc.n3}] += cnt * ln;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

bool quadratic_dedekind_check(const MonicPoly& f, long long bound) {
    if (f.degree() != 2) throw error("quadratic_dedekind_check: degree must be 2");
    for (long long n = 1; n <= bound; ++n) {
        long long ideals = static_cast<long long>(enumerate_ideals_of_norm_pruned(f, n).size());
        long long expected = 0;
        for (long long l = 1; l * l <= n; ++l)
            if (n % (l * l) == 0)
                expected += static_cast<long long>(roots_mod(f, n / (l * l)).size());
        if (ideals != expected) return false;
    }
    return true;
}

} // namespace rootcong
