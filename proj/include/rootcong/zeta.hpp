#ifndef ROOTCONG_ZETA_HPP
#define ROOTCONG_ZETA_HPP

#include <map>

#include "rootcong/correspondence.hpp"

namespace rootcong {

/// Splitting behavior of a rational prime in Z[2^(1/3)].
enum class PrimeClass {
    Ramified,      // p in {2, 3}
    Inert,         // p = 1 mod 3, 2 not a cube mod p: no roots
    TotallySplit,  // p = 1 mod 3 and p = X^2 + 27 Y^2: three roots
    PartialSplit   // p = 2 mod 3: one root, degree-1 times degree-2 prime
};

PrimeClass classify_prime(const Int& p);

/// Invariant-factor triple (N1, N2, N3) with N3 | N2 | N1.
struct Cotype {
    Int n1, n2, n3;

    bool operator==(const Cotype& o) const {
        return n1 == o.n1 && n2 == o.n2 && n3 == o.n3;
    }
    bool operator<(const Cotype& o) const {
        if (n1 != o.n1) return n1 < o.n1;
        if (n2 != o.n2) return n2 < o.n2;
        return n3 < o.n3;
    }
};

using CotypeCounts = std::map<Cotype, long long>;

/// Count the ideals of Z[2^(1/3)] with N1 * N2 * N3 <= bound, grouped by
/// invariant-factor triple. Each ideal is written as content times a
/// content-free part, the content-free parts are generated from pairs of
/// root classes with glue entries, and the totals are re-counted by
/// exhaustive HNF enumeration; a disagreement throws.
CotypeCounts enumerate_ideals_by_cotype(long long bound);

/// The same counts from the Euler product: each prime contributes a local
/// series in the exponent triple (a, b, c) -> (p^{a+b+c}, p^{b+c}, p^c)
/// determined by its splitting class, and the global coefficients are the
/// multiplicative convolution over p <= bound.
CotypeCounts euler_cotype_coefficients(long long bound);

/// For a quadratic order: the number of ideals of norm n equals
/// sum over l^2 | n of the number of roots of F mod n / l^2, for all
/// n <= bound. Counts ideals exhaustively and returns the conjunction.
bool quadratic_dedekind_check(const MonicPoly& f, long long bound);

} // namespace rootcong

#endif
