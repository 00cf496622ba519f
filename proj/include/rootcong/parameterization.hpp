#ifndef ROOTCONG_PARAMETERIZATION_HPP
#define ROOTCONG_PARAMETERIZATION_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "rootcong/correspondence.hpp"

namespace rootcong {

/// Data of a narrow-class-number-1 order needed for the explicit root
/// parameterization: multiplication tables of the power basis, fundamental
/// totally positive units with inverses, and the real embedding used to pick
/// unit powers. All unit arithmetic is exact; the embedding is only used to
/// choose integer exponents and every result is re-verified exactly.
struct OrderData {
    MonicPoly f;
    int r1, r2;
    std::vector<IntMatrix> btables;          // B_i: alpha^{d-i} * alpha^{d-j} expanded
    std::vector<OrderElement> units;         // generators of the totally positive units
    std::vector<OrderElement> unit_invs;
    double real_embedding;                   // largest real root of F (0 if r1 = 0)
};

/// Build OrderData for an arbitrary valid polynomial: tables from the power
/// basis, no units (reduction degenerates to a sign fix).
OrderData make_order_data(const MonicPoly& f);

/// Z[2^(1/3)]: fundamental totally positive unit 1 + alpha + alpha^2.
OrderData order_data_cube2();
/// Z[i]: finite unit group, nothing to reduce.
OrderData order_data_gauss();

/// C = sum_i c_i B_i, the multiplication-by-xi matrix with
/// xi = sum_i c_i alpha^{d-i}.
IntMatrix c_matrix(const OrderData& data, const std::vector<Int>& c);

/// Multiply xi by units until log|xi^(1)| - (1/d) log N(xi) falls in the
/// canonical window [0, log eps^(1)); flips sign first when N(xi) < 0 at
/// odd degree.
std::vector<Int> reduce_to_domain(const OrderData& data, std::vector<Int> c);

struct ParamWitness {
    std::vector<Int> c;
    IntMatrix C;
    std::vector<Int> u;
    IntMatrix gamma;       // det +1, gamma * C is the HNF root matrix
    Int m;
    std::vector<Int> mu_powers;  // representatives of mu^{d-1}, ..., mu in [0, m)
    int k;                 // 1-based row index maximizing |det C_kd|
};

struct ParamResult {
    std::optional<ParamWitness> witness;
    Int failing_gcd;       // > 1 when degenerate (quotient not cyclic)

    bool degenerate() const { return !witness.has_value(); }
};

/// The full parameterization pipeline: build C, complete the minor weights
/// to a unimodular matrix, recover (m, mu) from gamma * C. Degenerate when
/// the minors along the last column share a factor.
ParamResult params_from_c(const OrderData& data, const std::vector<Int>& c);

/// Bounded search for the c-vector of a root; inverse of params_from_c.
/// search_bound <= 0 picks the default 4 * m^(1/d) + 4.
std::vector<Int> c_from_root(const OrderData& data, const RootClass& root,
                             long long search_bound = 0);

struct HooleyResult {
    bool degenerate;
    Int m1, mu1, m2, mu2;
    std::array<Int, 6> plucker;   // (a, b, c, a', b', c')
    std::vector<Int> cprime;
};

/// Cubic X^3 - 2 specialization: the second coordinate vector is
/// proportional to (c2^2 - c1 c3, 2 c1^2 - c2 c3, c3^2 - 2 c1 c2) and
/// m1 is the gcd of those entries.
HooleyResult hooley_params(const Int& c1, const Int& c2, const Int& c3);

struct Approximation {
    int k;
    std::vector<Rat> point;   // coordinates in [0, 1)
    Rat deviation;            // exact max-norm torus distance to the root point
};

Approximation approximation(const OrderData& data, const ParamWitness& w);

struct TorsionPointLattice {
    Int q;                 // |det C_kd|, the denominator of the torsion point
    IntMatrix basis;       // columns generate the lattice
    Int shortest_sq;       // squared length of a shortest nonzero vector
};

TorsionPointLattice torsion_lattice(const ParamWitness& w, long long coeff_box = 20);

struct SpacingCensus {
    int max_occupancy;
    std::map<int, long long> histogram;  // occupancy -> number of points
    long long points;
};

/// Roots with M < m <= 2M and gcd(m, D) = 1, mapped to
/// (mu^{d-1}/m, ..., mu/m) on the torus; occupancy of the max-norm ball of
/// the given radius around each point.
SpacingCensus spacing_census(const MonicPoly& f, long long M, double radius);

} // namespace rootcong

#endif
