#ifndef ROOTCONG_EXACT_LINALG_HPP
#define ROOTCONG_EXACT_LINALG_HPP

#include <vector>

#include "rootcong/numeric.hpp"

namespace rootcong {

/// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix scaled(const Int& s) const;
    IntMatrix transposed() const;

    void swap_rows(int i, int j);
    /// row i += c * row j
    void add_row(int i, int j, const Int& c);

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Int det(const IntMatrix& m);

/// Determinant of m with drop_row and drop_col removed; the 0x0 minor is 1.
Int minor_det(const IntMatrix& m, int drop_row, int drop_col);

/// Adjugate: adj(m) * m = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

struct HnfResult {
    IntMatrix h; ///< upper-triangular, h[j][j] > 0, 0 <= h[i][j] < h[j][j] for i < j
    IntMatrix t; ///< unimodular, h = t * m
};

/// Row-style Hermite normal form of a nonsingular square matrix.
/// Throws singular_matrix if det(m) = 0.
HnfResult hnf_upper(const IntMatrix& m);

/// HNF of a (possibly rectangular) matrix whose rows span a rank-`cols` lattice.
/// Returns the square cols x cols HNF basis. Throws singular_matrix if the
/// rows do not have full column rank.
IntMatrix hnf_of_rows(const IntMatrix& m);

/// Smith normal form diagonal d1 | d2 | ... (all positive, product = |det m|).
/// Throws singular_matrix if det(m) = 0.
std::vector<Int> snf_diagonal(const IntMatrix& m);

/// Deterministic multi-term extended gcd: returns u with sum_j weights[j]*u[j] = 1.
/// Folds left to right, canonicalizing each partial Bezout pair to the minimal
/// non-negative first coefficient. Throws not_coprime if gcd(weights) != 1.
std::vector<Int> gcd_completion(const std::vector<Int>& weights);

/// True iff every entry of num is divisible by den (den != 0).
bool divides_matrix(const IntMatrix& num, const Int& den);

} // namespace rootcong

#endif
