#ifndef ROOTCONG_IDEALS_HPP
#define ROOTCONG_IDEALS_HPP

#include <vector>

#include "rootcong/order_core.hpp"

namespace rootcong {

/// Ideal of Z[alpha] as a validated HNF basis matrix. Rows are basis
/// elements on (alpha^{d-1}, ..., alpha, 1); upper-triangular with positive
/// pivots and reduced off-diagonals. Construction checks the ideal
/// criterion (B A B^{-1} integral) and the pivot divisibility chain.
class IdealHNF {
public:
    IdealHNF(const MonicPoly& f, IntMatrix b);

    const MonicPoly& poly() const { return *f_; }
    const IntMatrix& basis() const { return b_; }

    bool operator==(const IdealHNF& o) const { return b_ == o.b_; }
    bool operator!=(const IdealHNF& o) const { return !(*this == o); }
    bool operator<(const IdealHNF& o) const;

    static IdealHNF whole_ring(const MonicPoly& f);

private:
    const MonicPoly* f_;
    IntMatrix b_;
};

/// Ideal criterion: the lattice with HNF basis B is an ideal iff
/// B * A * adj(B) is divisible by det(B).
bool is_ideal(const MonicPoly& f, const IntMatrix& b);

/// Diagonal of B sorted descending: (N1, N2, ...) with N_d | ... | N1.
std::vector<Int> invariant_factors(const IdealHNF& i);

Int norm(const IdealHNF& i);

/// Product ideal: HNF of the lattice spanned by all pairwise basis products.
IdealHNF multiply(const IdealHNF& i, const IdealHNF& j);

/// True iff J is contained in I (every basis element of J is an integer
/// combination of I's basis).
bool contains(const IdealHNF& i, const IdealHNF& j);

/// Largest rational integer l with I contained in l * Z[alpha]; equals B[0][0].
Int integer_content(const IdealHNF& i);

/// Divide out an integer content (c must divide every entry).
IdealHNF divide_content(const IdealHNF& i, const Int& c);

/// All ideals of exact norm n: every upper-triangular HNF matrix with
/// pivot product n, filtered by is_ideal. Exponential in divisor structure;
/// use for oracle duty only.
std::vector<IdealHNF> enumerate_ideals_of_norm(const MonicPoly& f, const Int& n);

/// Same output, pruned by the pivot divisibility chain and off-diagonal
/// multiples that any ideal must satisfy. Faster, used for larger bounds
/// after the unpruned version certifies it on small norms.
std::vector<IdealHNF> enumerate_ideals_of_norm_pruned(const MonicPoly& f, const Int& n);

} // namespace rootcong

#endif
