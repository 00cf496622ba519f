#include "rootcong/composition.hpp"

namespace rootcong {

RootClass lift_filter(const MonicPoly& f, const Int& M,
                      const std::vector<std::pair<Int, Int>>& congruences,
                      const std::function<bool(const Int&)>& extra) {
    std::vector<RootClass> hits;
    for (const auto& r : roots_mod(f, M)) {
        bool ok = true;
        for (const auto& [mod, res] : congruences)
            if (mod_floor(r.mu - res, mod) != 0) { ok = false; break; }
        if (ok && extra && !extra(r.mu)) ok = false;
        if (ok) hits.push_back(r);
    }
    if (hits.size() != 1)
        throw uniqueness_violation("expected one root mod " + to_string(M) + ", found " +
                                   std::to_string(hits.size()));
    return hits.front();
}

ComposeRootsResult compose_roots(const MonicPoly& f, const RootClass& r1, const RootClass& r2) {
    if (gcd(r1.m * r2.m, f.discriminant()) != 1)
        throw ramified_input("moduli must be coprime to the discriminant");
    Int g = gcd(r1.m, r2.m);
    if (mod_floor(r1.mu - r2.mu, g) != 0) {
        auto product = multiply(root_to_ideal(f, r1), root_to_ideal(f, r2));
        return {ComposeRootsResult::Status::NonCyclicProduct, std::nullopt, std::move(product)};
    }
    RootClass root = lift_filter(f, r1.m * r2.m, {{r1.m, r1.mu}, {r2.m, r2.mu}});
    return {ComposeRootsResult::Status::Composed, root, std::nullopt};
}

ComposePairsResult compose_pairs(const MonicPoly& f, const RootPair& p, const RootPair& q) {
    Int norm_p = p.m1 * p.m1 * p.m2, norm_q = q.m1 * q.m1 * q.m2;
    if (gcd(norm_p * norm_q, f.discriminant()) != 1)
        throw ramified_input("norms must be coprime to the discriminant");

    bool ok = mod_floor(p.mu1 - q.mu1, gcd(p.m1, q.m1)) == 0 &&
              gcd(gcd(p.m1, q.m2), p.mu1 - q.mu2) == 1 &&
              gcd(gcd(p.m2, q.m1), p.mu2 - q.mu1) == 1;
    if (!ok) {
        auto product = multiply(pair_to_ideal(f, p), pair_to_ideal(f, q));
        return {ComposePairsResult::Status::IntegerDivisible, std::nullopt, std::move(product), 0};
    }

    Int g2 = gcd(p.m2, q.m2);
    Int l = g2 / gcd(g2, p.mu2 - q.mu2);

    Int M1 = p.m1 * q.m1 * l;
    RootClass t1 = lift_filter(f, M1, {{p.m1, p.mu1}, {q.m1, q.mu1}}, [&](const Int& mu) {
        return gcd(l, (mu - p.mu2) * (mu - q.mu2)) == 1;
    });

    Int M2 = p.m2 * q.m2 / (l * l);
    RootClass t2 = lift_filter(f, M2, {{p.m2 / l, p.mu2}, {q.m2 / l, q.mu2}});

    RootPair pair = make_pair(f, t1.mu, M1, t2.mu, M2);
    return {ComposePairsResult::Status::Composed, pair, std::nullopt, l};
}

} // namespace rootcong
