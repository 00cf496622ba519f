#ifndef ROOTCONG_ORDER_CORE_HPP
#define ROOTCONG_ORDER_CORE_HPP

#include <vector>

#include "rootcong/exact_linalg.hpp"
#include "rootcong/numeric.hpp"

namespace rootcong {

/// Monic integer polynomial F(X) = X^d + a1 X^{d-1} + ... + ad, d >= 2,
/// nonzero discriminant. Irreducibility over Q is fully checked for d <= 3
/// (rational root test plus discriminant); for d >= 4 the caller vouches by
/// passing trust_irreducible = true.
class MonicPoly {
public:
    explicit MonicPoly(std::vector<Int> coeffs, bool trust_irreducible = false);

    int degree() const { return static_cast<int>(a_.size()); }
    /// a(1) = a1, ..., a(d) = ad
    const Int& a(int i) const { return a_[static_cast<size_t>(i) - 1]; }
    const std::vector<Int>& coeffs() const { return a_; }

    Int eval(const Int& x) const;
    /// F'(x)
    Int eval_deriv(const Int& x) const;
    Int discriminant() const { return disc_; }

    bool operator==(const MonicPoly& o) const { return a_ == o.a_; }

private:
    std::vector<Int> a_;
    Int disc_;
};

/// Element of Z[alpha] as coefficients (e_{d-1}, ..., e_1, e_0) on the
/// basis (alpha^{d-1}, ..., alpha, 1).
struct OrderElement {
    std::vector<Int> coeffs;

    int degree_bound() const { return static_cast<int>(coeffs.size()); }
    bool operator==(const OrderElement& o) const { return coeffs == o.coeffs; }
};

/// Residue class mu mod m with F(mu) = 0 (mod m), 0 <= mu < m.
struct RootClass {
    Int m;
    Int mu;

    bool operator==(const RootClass& o) const { return m == o.m && mu == o.mu; }
    bool operator<(const RootClass& o) const {
        return m != o.m ? m < o.m : mu < o.mu;
    }
};

/// Multiplication-by-alpha matrix on the basis (alpha^{d-1}, ..., alpha, 1):
/// first row (-a1, ..., -ad), subdiagonal ones below.
IntMatrix companion_matrix(const MonicPoly& f);

/// Coefficient row of alpha^k * x is coeffs(x) * A^k; this wraps a single step.
OrderElement mul_by_alpha(const OrderElement& x, const MonicPoly& f);

OrderElement mul_elements(const OrderElement& x, const OrderElement& y, const MonicPoly& f);

OrderElement one_element(int d);
OrderElement alpha_power(int d, int k);

Int resultant(const std::vector<Int>& p, const std::vector<Int>& q);

/// All roots of F mod m, sorted. Exhaustive scan for m <= scan_threshold,
/// factorization + Hensel lifting + CRT above it.
std::vector<RootClass> roots_mod(const MonicPoly& f, const Int& m,
                                 const Int& scan_threshold = Int(1000000));

/// Serial exhaustive scan, kept as the reference implementation for the
/// parallel kernel.
std::vector<Int> roots_scan_serial(const MonicPoly& f, const Int& m);
std::vector<Int> roots_scan_parallel(const MonicPoly& f, const Int& m);

/// Lift a simple root mod p^k to mod p^{k+1}. Throws not_simple_root when
/// p divides F'(mu).
RootClass hensel_lift(const MonicPoly& f, const RootClass& root, const Int& p);

/// Trial-division factorization, pairs (p, exponent), p ascending.
std::vector<std::pair<Int, int>> factorize(Int n);

/// CRT for two coprime moduli.
Int crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

} // namespace rootcong

#endif
