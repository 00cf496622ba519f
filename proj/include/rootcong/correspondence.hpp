#ifndef ROOTCONG_CORRESPONDENCE_HPP
#define ROOTCONG_CORRESPONDENCE_HPP

#include "rootcong/ideals.hpp"

namespace rootcong {

/// Cubic ideal datum: two root classes plus the glued top-right entry.
/// Parameterizes content-free ideals of a cubic order.
struct RootPair {
    Int m1, mu1;
    Int m2, mu2;
    Int lambda;  // mod m1*m2

    bool operator==(const RootPair& o) const {
        return m1 == o.m1 && mu1 == o.mu1 && m2 == o.m2 && mu2 == o.mu2 && lambda == o.lambda;
    }
    bool operator<(const RootPair& o) const;
};

struct LambdaSolution {
    Int lambda;    // mod m1*m2
    Int kappa;     // mod gcd(m1, m2)
    Int mbar1, mbar2;
};

/// Ideal with cyclic quotient attached to a root: rows (e_i | -mu^{d-1-i})
/// reduced mod m, last row (0, ..., 0, m).
IdealHNF root_to_ideal(const MonicPoly& f, const RootClass& root);

/// Inverse direction; requires invariant factors (m, 1, ..., 1).
RootClass ideal_to_root(const IdealHNF& i);

/// Solve for the glue entry lambda of a cubic pair ideal. Requires
/// gcd(m1, m2, mu1 - mu2) = 1.
LambdaSolution solve_lambda(const MonicPoly& f, const Int& mu1, const Int& m1,
                            const Int& mu2, const Int& m2);

RootPair make_pair(const MonicPoly& f, const Int& mu1, const Int& m1,
                   const Int& mu2, const Int& m2);

/// HNF reduction of the basis {(1, mu1+a1, lambda), (0, m1, -mu2*m1),
/// (0, 0, m1*m2)}.
IdealHNF pair_to_ideal(const MonicPoly& f, const RootPair& pair);

struct PairReadoff {
    RootPair pair;
    bool canonical;  // false when gcd(m1*m2, D) > 1: pair need not be unique
};

/// Read the pair off a content-free cubic ideal's HNF basis.
PairReadoff ideal_to_pair(const IdealHNF& i);

} // namespace rootcong

#endif
