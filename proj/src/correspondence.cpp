#include "rootcong/correspondence.hpp"

namespace rootcong {

bool RootPair::operator<(const RootPair& o) const {
    if (m1 != o.m1) return m1 < o.m1;
    if (mu1 != o.mu1) return mu1 < o.mu1;
    if (m2 != o.m2) return m2 < o.m2;
    if (mu2 != o.mu2) return mu2 < o.mu2;
    return lambda < o.lambda;
}

IdealHNF root_to_ideal(const MonicPoly& f, const RootClass& root) {
    if (root.m < 1 || root.mu < 0 || root.mu >= root.m)
        throw not_a_root("root representative out of range");
    if (mod_floor(f.eval(root.mu), root.m) != 0)
        throw not_a_root("F(mu) != 0 mod m");
    int d = f.degree();
    IntMatrix b(d, d);
    Int power = 1;  // mu^{d-1-i} built from the bottom row up
    b.at(d - 1, d - 1) = root.m;
    for (int i = d - 2; i >= 0; --i) {
        power = mod_floor(power * root.mu, root.m);
        b.at(i, i) = 1;
        b.at(i, d - 1) = mod_floor(-power, root.m);
    }
    return IdealHNF(f, b);
}

RootClass ideal_to_root(const IdealHNF& i) {
    int d = i.basis().rows();
    for (int k = 0; k + 1 < d; ++k)
        if (i.basis().at(k, k) != 1)
            throw not_cyclic_quotient("invariant factor " + to_string(i.basis().at(k, k)) +
                                      " at position " + std::to_string(k));
    Int m = i.basis().at(d - 1, d - 1);
    Int mu = d >= 2 ? mod_floor(-i.basis().at(d - 2, d - 1), m) : Int(0);
    return {m, mu};
}

LambdaSolution solve_lambda(const MonicPoly& f, const Int& mu1, const Int& m1,
                            const Int& mu2, const Int& m2) {
    if (f.degree() != 3) throw error("solve_lambda: cubic polynomials only");
    if (mod_floor(f.eval(mu1), m1) != 0 || mod_floor(f.eval(mu2), m2) != 0)
        throw not_a_root("pair members must be roots");
    Int g = gcd(m1, m2);
    if (gcd(g, mu1 - mu2) != 1)
        throw gcd_obstruction("gcd(m1, m2, mu1 - mu2) > 1");
    auto e = ext_gcd(m1 / g, m2 / g);
    Int mbar1 = e.x, mbar2 = e.y;
    Int kappa = 0;
    if (g > 1) {
        Int lhs = (f.eval(mu1) / m1) * mbar2 + (f.eval(mu2) / m2) * mbar1;
        kappa = mod_floor(-lhs * inv_mod(mu1 - mu2, g), g);
    }
    const Int &a1 = f.a(1), &a2 = f.a(2);
    Int lam = (mu1 * mu1 + a1 * mu1 + a2) * mbar2 * (m2 / g)
            - (mu2 * mu2 + mu1 * mu2 + a1 * mu2) * mbar1 * (m1 / g)
            + kappa * m1 * (m2 / g);
    lam = mod_floor(lam, m1 * m2);
    return {lam, kappa, mbar1, mbar2};
}

RootPair make_pair(const MonicPoly& f, const Int& mu1, const Int& m1,
                   const Int& mu2, const Int& m2) {
    auto s = solve_lambda(f, mu1, m1, mu2, m2);
    return {m1, mod_floor(mu1, m1), m2, mod_floor(mu2, m2), s.lambda};
}

IdealHNF pair_to_ideal(const MonicPoly& f, const RootPair& pair) {
    if (f.degree() != 3) throw error("pair_to_ideal: cubic polynomials only");
    if (gcd(gcd(pair.m1, pair.m2), pair.mu1 - pair.mu2) != 1)
        throw gcd_obstruction("gcd(m1, m2, mu1 - mu2) > 1");
    IntMatrix b(3, 3);
    b.at(0, 0) = 1;
    b.at(0, 1) = pair.mu1 + f.a(1);
    b.at(0, 2) = pair.lambda;
    b.at(1, 1) = pair.m1;
    b.at(1, 2) = -pair.mu2 * pair.m1;
    b.at(2, 2) = pair.m1 * pair.m2;
    return IdealHNF(f, hnf_upper(b).h);
}

PairReadoff ideal_to_pair(const IdealHNF& i) {
    const MonicPoly& f = i.poly();
    if (f.degree() != 3) throw error("ideal_to_pair: cubic polynomials only");
    const IntMatrix& b = i.basis();
    if (b.at(0, 0) != 1) throw has_integer_content("content " + to_string(b.at(0, 0)));
    Int m1 = b.at(1, 1);
    if (b.at(2, 2) % m1 != 0) throw malformed_ideal("m1 does not divide bottom pivot");
    Int m2 = b.at(2, 2) / m1;
    if (b.at(1, 2) % m1 != 0) throw malformed_ideal("m1 does not divide b[1][2]");
    Int mu1 = mod_floor(b.at(0, 1) - f.a(1), m1);
    Int mu2 = mod_floor(-(b.at(1, 2) / m1), m2);
    // undo the HNF range reduction of the raw basis: the raw top row is
    // (1, mu1 + a1, lambda) and differs from row 0 by a multiple of row 1
    Int k = (mu1 + f.a(1) - b.at(0, 1)) / m1;
    Int lambda = mod_floor(b.at(0, 2) + k * b.at(1, 2), m1 * m2);
    RootPair pair{m1, mu1, m2, mu2, lambda};
    bool canonical = gcd(m1 * m2, f.discriminant()) == 1;
    if (canonical && gcd(gcd(m1, m2), mu1 - mu2) != 1)
        throw malformed_ideal("unramified pair violates the gcd condition");
    return {pair, canonical};
}

} // namespace rootcong
