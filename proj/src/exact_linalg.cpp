#include "rootcong/exact_linalg.hpp"

#include <utility>

namespace rootcong {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    IntMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    IntMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

IntMatrix IntMatrix::scaled(const Int& s) const {
    IntMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * s;
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::add_row(int i, int j, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

Int det(const IntMatrix& m) {
    int n = m.rows();
    if (n != m.cols()) throw error("det: matrix not square");
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

Int minor_det(const IntMatrix& m, int drop_row, int drop_col) {
    int n = m.rows();
    if (n != m.cols()) throw error("minor_det: matrix not square");
    if (drop_row < 0 || drop_row >= n || drop_col < 0 || drop_col >= n)
        throw error("minor_det: index out of bounds");
    IntMatrix sub(n - 1, n - 1);
    for (int i = 0, si = 0; i < n; ++i) {
        if (i == drop_row) continue;
        for (int j = 0, sj = 0; j < n; ++j) {
            if (j == drop_col) continue;
            sub.at(si, sj) = m.at(i, j);
            ++sj;
        }
        ++si;
    }
    return det(sub);
}

IntMatrix adjugate(const IntMatrix& m) {
    int n = m.rows();
    IntMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int c = minor_det(m, j, i);
            r.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
        }
    return r;
}

namespace {

// Shared row-HNF kernel; reduces `w` in place, mirroring every row
// operation on `t` when tracking is requested.
void hnf_inplace(IntMatrix& w, IntMatrix* t) {
    int rows = w.rows(), cols = w.cols();
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        // clear everything below pivot_row in this column via gcd steps
        for (int i = pivot_row + 1; i < rows; ++i) {
            if (w.at(i, col) == 0) continue;
            if (w.at(pivot_row, col) == 0) {
                w.swap_rows(pivot_row, i);
                if (t) t->swap_rows(pivot_row, i);
                continue;
            }
            auto e = ext_gcd(w.at(pivot_row, col), w.at(i, col));
            Int a = w.at(pivot_row, col) / e.g, b = w.at(i, col) / e.g;
            // rows (p, i) <- (x*p + y*i, -b*p + a*i); the 2x2 transform has det 1
            for (int k = 0; k < cols; ++k) {
                Int np = e.x * w.at(pivot_row, k) + e.y * w.at(i, k);
                Int ni = -b * w.at(pivot_row, k) + a * w.at(i, k);
                w.at(pivot_row, k) = np;
                w.at(i, k) = ni;
            }
            if (t)
                for (int k = 0; k < t->cols(); ++k) {
                    Int np = e.x * t->at(pivot_row, k) + e.y * t->at(i, k);
                    Int ni = -b * t->at(pivot_row, k) + a * t->at(i, k);
                    t->at(pivot_row, k) = np;
                    t->at(i, k) = ni;
                }
        }
        if (w.at(pivot_row, col) == 0) continue; // rank deficiency in this column
        if (w.at(pivot_row, col) < 0) {
            for (int k = 0; k < cols; ++k) w.at(pivot_row, k) = -w.at(pivot_row, k);
            if (t)
                for (int k = 0; k < t->cols(); ++k) t->at(pivot_row, k) = -t->at(pivot_row, k);
        }
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < pivot_row; ++i) {
            Int q = w.at(i, col) / w.at(pivot_row, col);
            if (w.at(i, col) - q * w.at(pivot_row, col) < 0) q -= 1; // floor division
            if (q == 0) continue;
            w.add_row(i, pivot_row, -q);
            if (t) t->add_row(i, pivot_row, -q);
        }
        ++pivot_row;
    }
}

} // namespace

HnfResult hnf_upper(const IntMatrix& m) {
    int n = m.rows();
    if (n != m.cols()) throw error("hnf_upper: matrix not square");
    if (det(m) == 0) throw singular_matrix("hnf_upper: singular matrix");
    IntMatrix h = m;
    IntMatrix t = IntMatrix::identity(n);
    hnf_inplace(h, &t);
    return {std::move(h), std::move(t)};
}

IntMatrix hnf_of_rows(const IntMatrix& m) {
    IntMatrix w = m;
    hnf_inplace(w, nullptr);
    int n = m.cols();
    if (m.rows() < n) throw singular_matrix("hnf_of_rows: fewer rows than columns");
    IntMatrix h(n, n);
    for (int i = 0; i < n; ++i) {
        if (w.at(i, i) == 0) throw singular_matrix("hnf_of_rows: rows not of full rank");
        for (int j = 0; j < n; ++j) h.at(i, j) = w.at(i, j);
    }
    return h;
}

std::vector<Int> snf_diagonal(const IntMatrix& m) {
    int n = m.rows();
    if (n != m.cols()) throw error("snf_diagonal: matrix not square");
    if (det(m) == 0) throw singular_matrix("snf_diagonal: singular matrix");
    IntMatrix w = m;

    auto clear_off_diagonal = [&](int k) {
        // returns true once row k and column k are zero outside (k,k)
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = k + 1; i < n; ++i) {
                if (w.at(i, k) == 0) continue;
                if (w.at(i, k) % w.at(k, k) == 0) {
                    // plain subtraction keeps row k intact, so no ping-pong
                    Int q = w.at(i, k) / w.at(k, k);
                    for (int j = 0; j < n; ++j) w.at(i, j) -= q * w.at(k, j);
                } else {
                    auto e = ext_gcd(w.at(k, k), w.at(i, k));
                    Int a = w.at(k, k) / e.g, b = w.at(i, k) / e.g;
                    for (int j = 0; j < n; ++j) {
                        Int nk = e.x * w.at(k, j) + e.y * w.at(i, j);
                        Int ni = -b * w.at(k, j) + a * w.at(i, j);
                        w.at(k, j) = nk;
                        w.at(i, j) = ni;
                    }
                }
                changed = true;
            }
            for (int j = k + 1; j < n; ++j) {
                if (w.at(k, j) == 0) continue;
                if (w.at(k, j) % w.at(k, k) == 0) {
                    Int q = w.at(k, j) / w.at(k, k);
                    for (int i = 0; i < n; ++i) w.at(i, j) -= q * w.at(i, k);
                } else {
                    auto e = ext_gcd(w.at(k, k), w.at(k, j));
                    Int a = w.at(k, k) / e.g, b = w.at(k, j) / e.g;
                    for (int i = 0; i < n; ++i) {
                        Int nk = e.x * w.at(i, k) + e.y * w.at(i, j);
                        Int nj = -b * w.at(i, k) + a * w.at(i, j);
                        w.at(i, k) = nk;
                        w.at(i, j) = nj;
                    }
                }
                changed = true;
            }
        }
    };

    for (int k = 0; k < n; ++k) {
        if (w.at(k, k) == 0) {
            bool found = false;
            for (int i = k; i < n && !found; ++i)
                for (int j = k; j < n && !found; ++j)
                    if (w.at(i, j) != 0) {
                        w.swap_rows(k, i);
                        if (j != k)
                            for (int r = 0; r < n; ++r) std::swap(w.at(r, k), w.at(r, j));
                        found = true;
                    }
        }
        clear_off_diagonal(k);
    }
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = abs(w.at(i, i));
    // enforce the divisibility chain
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Int g = gcd(d[i], d[j]);
            Int l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    return d;
}

std::vector<Int> gcd_completion(const std::vector<Int>& weights) {
    size_t n = weights.size();
    std::vector<Int> u(n, 0);
    if (n == 0) throw not_coprime("gcd_completion: empty weights");
    Int g = weights[0];
    u[0] = 1;
    for (size_t j = 1; j < n; ++j) {
        auto e = ext_gcd(g, weights[j]);
        for (size_t k = 0; k < j; ++k) u[k] *= e.x;
        u[j] = e.y;
        g = e.g;
    }
    if (g == 1) return u;
    if (g == -1) {
        for (auto& v : u) v = -v;
        return u;
    }
    throw not_coprime("gcd_completion: gcd of weights is not 1");
}

bool divides_matrix(const IntMatrix& num, const Int& den) {
    for (int i = 0; i < num.rows(); ++i)
        for (int j = 0; j < num.cols(); ++j)
            if (num.at(i, j) % den != 0) return false;
    return true;
}

} // namespace rootcong
