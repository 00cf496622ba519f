#include "rootcong/order_core.hpp"

#include <algorithm>

#ifdef ROOTCONG_OPENMP
#include <omp.h>
#endif

namespace rootcong {

namespace {

// full coefficient list [1, a1, ..., ad] of F
std::vector<Int> full_coeffs(const std::vector<Int>& a) {
    std::vector<Int> c;
    c.reserve(a.size() + 1);
    c.push_back(1);
    for (const auto& v : a) c.push_back(v);
    return c;
}

std::vector<Int> derivative(const std::vector<Int>& p) {
    // p = c0 x^n + c1 x^{n-1} + ... + cn
    int n = static_cast<int>(p.size()) - 1;
    std::vector<Int> d;
    for (int i = 0; i < n; ++i) d.push_back(p[i] * (n - i));
    return d;
}

} // namespace

Int resultant(const std::vector<Int>& p0, const std::vector<Int>& q0) {
    // Sylvester matrix determinant; p, q as descending coefficient lists
    auto strip = [](std::vector<Int> v) {
        size_t i = 0;
        while (i < v.size() && v[i] == 0) ++i;
        return std::vector<Int>(v.begin() + static_cast<long>(i), v.end());
    };
    std::vector<Int> p = strip(p0), q = strip(q0);
    if (p.empty() || q.empty()) return 0;
    int dp = static_cast<int>(p.size()) - 1, dq = static_cast<int>(q.size()) - 1;
    if (dp == 0 && dq == 0) return 1;
    int n = dp + dq;
    IntMatrix s(n, n);
    for (int i = 0; i < dq; ++i)
        for (int j = 0; j <= dp; ++j) s.at(i, i + j) = p[static_cast<size_t>(j)];
    for (int i = 0; i < dp; ++i)
        for (int j = 0; j <= dq; ++j) s.at(dq + i, i + j) = q[static_cast<size_t>(j)];
    return det(s);
}

MonicPoly::MonicPoly(std::vector<Int> coeffs, bool trust_irreducible) : a_(std::move(coeffs)) {
    int d = static_cast<int>(a_.size());
    if (d < 2) throw invalid_poly("degree must be at least 2");
    auto f = full_coeffs(a_);
    Int res = resultant(f, derivative(f));
    // disc = (-1)^{d(d-1)/2} Res(F, F') for monic F
    disc_ = (d * (d - 1) / 2) % 2 == 0 ? res : -res;
    if (disc_ == 0) throw invalid_poly("zero discriminant (repeated root)");
    if (d <= 3) {
        // rational root test: any rational root of a monic integer polynomial
        // is an integer dividing the constant term
        const Int& c = a_.back();
        if (c == 0) throw invalid_poly("reducible: root at 0");
        for (Int t = 1; t * t <= abs(c); ++t) {
            if (abs(c) % t != 0) continue;
            Int u = abs(c) / t;
            Int nt = -t, nu = -u;
            for (const Int& r : {t, nt, u, nu})
                if (eval(r) == 0) throw invalid_poly("reducible: rational root " + to_string(r));
        }
    } else if (!trust_irreducible) {
        throw invalid_poly("degree >= 4 requires trust_irreducible");
    }
}

Int MonicPoly::eval(const Int& x) const {
    Int v = 1;
    for (const auto& c : a_) v = v * x + c;
    return v;
}

Int MonicPoly::eval_deriv(const Int& x) const {
    int d = degree();
    Int v = d;
    for (int i = 1; i < d; ++i) v = v * x + a(i) * (d - i);
    return v;
}

IntMatrix companion_matrix(const MonicPoly& f) {
    int d = f.degree();
    IntMatrix a(d, d);
    for (int j = 0; j < d; ++j) a.at(0, j) = -f.a(j + 1);
    for (int i = 1; i < d; ++i) a.at(i, i - 1) = 1;
    return a;
}

OrderElement one_element(int d) {
    OrderElement e;
    e.coeffs.assign(static_cast<size_t>(d), 0);
    e.coeffs.back() = 1;
    return e;
}

OrderElement alpha_power(int d, int k) {
    OrderElement e;
    e.coeffs.assign(static_cast<size_t>(d), 0);
    e.coeffs[static_cast<size_t>(d - 1 - k)] = 1;
    return e;
}

OrderElement mul_by_alpha(const OrderElement& x, const MonicPoly& f) {
    // coeffs are on (alpha^{d-1}, ..., 1); alpha * alpha^{d-1} folds via F
    int d = f.degree();
    OrderElement r;
    r.coeffs.assign(static_cast<size_t>(d), 0);
    const Int& top = x.coeffs[0];
    for (int k = 0; k < d - 1; ++k) r.coeffs[static_cast<size_t>(k)] = x.coeffs[static_cast<size_t>(k + 1)];
    if (top != 0)
        for (int i = 1; i <= d; ++i) r.coeffs[static_cast<size_t>(i - 1)] -= top * f.a(i);
    return r;
}

OrderElement mul_elements(const OrderElement& x, const OrderElement& y, const MonicPoly& f) {
    int d = f.degree();
    OrderElement acc;
    acc.coeffs.assign(static_cast<size_t>(d), 0);
    OrderElement shifted = y;
    // x = sum_k x_k alpha^k reading coeffs from the right
    for (int k = 0; k < d; ++k) {
        const Int& xk = x.coeffs[static_cast<size_t>(d - 1 - k)];
        if (xk != 0)
            for (int j = 0; j < d; ++j) acc.coeffs[static_cast<size_t>(j)] += xk * shifted.coeffs[static_cast<size_t>(j)];
        if (k < d - 1) shifted = mul_by_alpha(shifted, f);
    }
    return acc;
}

std::vector<Int> roots_scan_serial(const MonicPoly& f, const Int& m) {
    std::vector<Int> out;
    for (Int mu = 0; mu < m; ++mu)
        if (mod_floor(f.eval(mu), m) == 0) out.push_back(mu);
    return out;
}

std::vector<Int> roots_scan_parallel(const MonicPoly& f, const Int& m) {
#ifdef ROOTCONG_OPENMP
    long long n = m.convert_to<long long>();
    std::vector<std::vector<Int>> buckets;
    int nthreads = 1;
#pragma omp parallel
    {
#pragma omp single
        {
            nthreads = omp_get_num_threads();
            buckets.resize(static_cast<size_t>(nthreads));
        }
#pragma omp for schedule(static)
        for (long long v = 0; v < n; ++v) {
            Int mu = v;
            if (mod_floor(f.eval(mu), m) == 0)
                buckets[static_cast<size_t>(omp_get_thread_num())].push_back(mu);
        }
    }
    std::vector<Int> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
#else
    return roots_scan_serial(f, m);
#endif
}

RootClass hensel_lift(const MonicPoly& f, const RootClass& root, const Int& p) {
    if (mod_floor(f.eval_deriv(root.mu), p) == 0)
        throw not_simple_root("derivative vanishes mod " + to_string(p));
    const Int& pk = root.m;
    Int pk1 = pk * p;
    // mu' = mu - F(mu) * F'(mu)^{-1} mod p^{k+1}
    Int fmu = f.eval(root.mu);
    Int t = mod_floor(-(fmu / pk) * inv_mod(f.eval_deriv(root.mu), p), p);
    return {pk1, mod_floor(root.mu + t * pk, pk1)};
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
    auto e = ext_gcd(m1, m2);
    if (e.g != 1) throw not_coprime("crt: moduli not coprime");
    // r1 + m1 * x * (r2 - r1) with m1 x = 1 mod m2
    Int x = mod_floor(e.x, m2);
    return mod_floor(r1 + m1 * mod_floor(x * (r2 - r1), m2), m1 * m2);
}

namespace {

// all roots mod p^k by level-by-level lifting
std::vector<Int> roots_prime_power(const MonicPoly& f, const Int& p, int k) {
    std::vector<Int> cur = roots_scan_serial(f, p);
    Int pj = p;
    for (int j = 1; j < k; ++j) {
        Int pj1 = pj * p;
        std::vector<Int> next;
        for (const Int& mu : cur) {
            Int dmu = mod_floor(f.eval_deriv(mu), p);
            if (dmu != 0) {
                next.push_back(hensel_lift(f, {pj, mu}, p).mu);
            } else {
                for (Int t = 0; t < p; ++t) {
                    Int cand = mu + t * pj;
                    if (mod_floor(f.eval(cand), pj1) == 0) next.push_back(cand);
                }
            }
        }
        cur = std::move(next);
        pj = pj1;
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

} // namespace

std::vector<RootClass> roots_mod(const MonicPoly& f, const Int& m, const Int& scan_threshold) {
    if (m < 1) throw error("roots_mod: m must be positive");
    if (m == 1) return {{1, 0}};
    std::vector<Int> mus;
    if (m <= scan_threshold) {
        mus = roots_scan_parallel(f, m);
    } else {
        auto fac = factorize(m);
        std::vector<Int> acc{0};
        Int acc_mod = 1;
        for (const auto& [p, e] : fac) {
            Int pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            auto local = roots_prime_power(f, p, e);
            std::vector<Int> next;
            for (const Int& r : acc)
                for (const Int& s : local) next.push_back(crt(r, acc_mod, s, pe));
            acc = std::move(next);
            acc_mod *= pe;
        }
        std::sort(acc.begin(), acc.end());
        mus = std::move(acc);
    }
    std::vector<RootClass> out;
    out.reserve(mus.size());
    for (const Int& mu : mus) out.push_back({m, mu});
    return out;
}

} // namespace rootcong
