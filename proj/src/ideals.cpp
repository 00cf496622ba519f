#include "rootcong/ideals.hpp"

#include <algorithm>
#include <functional>

namespace rootcong {

namespace {

bool hnf_shape(const IntMatrix& b) {
    int d = b.rows();
    if (b.cols() != d) return false;
    for (int i = 0; i < d; ++i) {
        if (b.at(i, i) <= 0) return false;
        for (int j = 0; j < i; ++j)
            if (b.at(i, j) != 0) return false;
        for (int j = i + 1; j < d; ++j)
            if (b.at(i, j) < 0 || b.at(i, j) >= b.at(j, j)) return false;
    }
    return true;
}

bool divisibility_chain(const IntMatrix& b) {
    int d = b.rows();
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (b.at(i, j) % b.at(i, i) != 0) return false;
            if (b.at(j, j) % b.at(i, i) != 0) return false;
        }
    }
    return true;
}

} // namespace

bool is_ideal(const MonicPoly& f, const IntMatrix& b) {
    Int d = det(b);
    if (d == 0) throw singular_matrix("is_ideal: singular basis");
    IntMatrix m = b * companion_matrix(f) * adjugate(b);
    return divides_matrix(m, d);
}

IdealHNF::IdealHNF(const MonicPoly& f, IntMatrix b) : f_(&f), b_(std::move(b)) {
    if (!hnf_shape(b_)) throw malformed_ideal("basis not in HNF shape");
    if (!is_ideal(f, b_)) throw malformed_ideal("lattice is not an ideal");
    if (!divisibility_chain(b_)) throw malformed_ideal("pivot divisibility violated");
}

bool IdealHNF::operator<(const IdealHNF& o) const {
    int d = b_.rows();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (b_.at(i, j) != o.b_.at(i, j)) return b_.at(i, j) < o.b_.at(i, j);
        }
    return false;
}

IdealHNF IdealHNF::whole_ring(const MonicPoly& f) {
    return IdealHNF(f, IntMatrix::identity(f.degree()));
}

std::vector<Int> invariant_factors(const IdealHNF& i) {
    int d = i.basis().rows();
    std::vector<Int> out(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) out[static_cast<size_t>(k)] = i.basis().at(k, k);
    std::sort(out.begin(), out.end(), std::greater<Int>());
    return out;
}

Int norm(const IdealHNF& i) {
    Int n = 1;
    for (int k = 0; k < i.basis().rows(); ++k) n *= i.basis().at(k, k);
    return n;
}

IdealHNF multiply(const IdealHNF& i, const IdealHNF& j) {
    const MonicPoly& f = i.poly();
    int d = f.degree();
    IntMatrix products(d * d, d);
    for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) {
            OrderElement x, y;
            x.coeffs.resize(static_cast<size_t>(d));
            y.coeffs.resize(static_cast<size_t>(d));
            for (int k = 0; k < d; ++k) {
                x.coeffs[static_cast<size_t>(k)] = i.basis().at(r, k);
                y.coeffs[static_cast<size_t>(k)] = j.basis().at(s, k);
            }
            OrderElement p = mul_elements(x, y, f);
            for (int k = 0; k < d; ++k) products.at(r * d + s, k) = p.coeffs[static_cast<size_t>(k)];
        }
    return IdealHNF(f, hnf_of_rows(products));
}

bool contains(const IdealHNF& i, const IdealHNF& j) {
    Int d = det(i.basis());
    IntMatrix m = j.basis() * adjugate(i.basis());
    return divides_matrix(m, d);
}

Int integer_content(const IdealHNF& i) { return i.basis().at(0, 0); }

IdealHNF divide_content(const IdealHNF& i, const Int& c) {
    int d = i.basis().rows();
    IntMatrix b(d, d);
    for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) {
            if (i.basis().at(r, s) % c != 0) throw malformed_ideal("content does not divide basis");
            b.at(r, s) = i.basis().at(r, s) / c;
        }
    return IdealHNF(i.poly(), b);
}

namespace {

void divisor_tuples(const Int& n, int k, std::vector<Int>& cur,
                    const std::function<void(const std::vector<Int>&)>& emit) {
    if (k == 1) {
        cur.push_back(n);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Int q = n / d;
        for (const Int& v : {d, q}) {
            cur.push_back(v);
            divisor_tuples(n / v, k - 1, cur, emit);
            cur.pop_back();
            if (d * d == n) break;
        }
    }
}

template <typename Step>
std::vector<IdealHNF> enumerate_by(const MonicPoly& f, const Int& n, Step off_diag_step) {
    int d = f.degree();
    std::vector<IdealHNF> out;
    std::vector<Int> diag;
    divisor_tuples(n, d, diag, [&](const std::vector<Int>& dg) {
        IntMatrix b(d, d);
        for (int i = 0; i < d; ++i) b.at(i, i) = dg[static_cast<size_t>(i)];
        // fill off-diagonals (i, j), i < j, each in [0, dg[j]) with the
        // supplied step size
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) slots.emplace_back(i, j);
        std::function<void(size_t)> rec = [&](size_t s) {
            if (s == slots.size()) {
                if (is_ideal(f, b)) out.emplace_back(f, b);
                return;
            }
            auto [i, j] = slots[s];
            Int step = off_diag_step(dg, i, j);
            for (Int v = 0; v < dg[static_cast<size_t>(j)]; v += step) {
                b.at(i, j) = v;
                rec(s + 1);
            }
            b.at(i, j) = 0;
        };
        rec(0);
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<IdealHNF> enumerate_ideals_of_norm(const MonicPoly& f, const Int& n) {
    return enumerate_by(f, n, [](const std::vector<Int>&, int, int) { return Int(1); });
}

std::vector<IdealHNF> enumerate_ideals_of_norm_pruned(const MonicPoly& f, const Int& n) {
    int d = f.degree();
    // any ideal satisfies d_i | d_j for i < j and d_i | b_ij, so skip diagonals
    // without the chain and step off-diagonals by d_i
    std::vector<IdealHNF> out;
    std::vector<Int> diag;
    std::vector<IdealHNF> part = enumerate_by(f, n, [](const std::vector<Int>& dg, int i, int) {
        return dg[static_cast<size_t>(i)];
    });
    for (auto& ideal : part) {
        bool chain = true;
        for (int i = 0; i + 1 < d && chain; ++i)
            if (ideal.basis().at(i + 1, i + 1) % ideal.basis().at(i, i) != 0) chain = false;
        if (chain) out.push_back(std::move(ideal));
    }
    return out;
}

} // namespace rootcong
