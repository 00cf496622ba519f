#include "rootcong/parameterization.hpp"

#include <algorithm>
#include <cmath>

namespace rootcong {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a - q * b < 0) q -= 1;
    return q;
}

double element_embedding(const OrderElement& e, double x) {
    double v = 0;
    for (const auto& c : e.coeffs) v = v * x + c.convert_to<double>();
    return v;
}

OrderElement element_from(const std::vector<Int>& c) {
    OrderElement e;
    e.coeffs = c;
    return e;
}

// nearest integer to a rational, ties toward even handled as floor(x + 1/2)
Int nearest_int(const Rat& x) {
    Int num = numerator(x), den = denominator(x);
    return floor_div(2 * num + den, 2 * den);
}

Rat torus_dist(const Rat& x) {
    Rat d = x - Rat(nearest_int(x));
    return d < 0 ? Rat(-d) : d;
}

} // namespace

OrderData make_order_data(const MonicPoly& f) {
    int d = f.degree();
    OrderData data{f, 0, 0, {}, {}, {}, 0.0};
    data.btables.reserve(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i) {
        IntMatrix b(d, d);
        for (int j = 1; j <= d; ++j) {
            auto prod = mul_elements(alpha_power(d, d - i), alpha_power(d, d - j), f);
            for (int k = 1; k <= d; ++k) b.at(j - 1, k - 1) = prod.coeffs[static_cast<size_t>(k - 1)];
        }
        data.btables.push_back(std::move(b));
    }
    return data;
}

OrderData order_data_cube2() {
    MonicPoly f({0, 0, -2});
    OrderData data = make_order_data(f);
    data.r1 = 1;
    data.r2 = 1;
    data.real_embedding = std::cbrt(2.0);
    OrderElement eps{{1, 1, 1}};        // 1 + alpha + alpha^2, norm 1
    OrderElement eps_inv{{0, 1, -1}};   // alpha - 1
    if (mul_elements(eps, eps_inv, f) != one_element(3))
        throw error("unit inverse mismatch");
    if (det(c_matrix(data, eps.coeffs)) != 1)
        throw error("unit norm is not 1");
    data.units.push_back(eps);
    data.unit_invs.push_back(eps_inv);
    return data;
}

OrderData order_data_gauss() {
    MonicPoly f({0, 1});
    OrderData data = make_order_data(f);
    data.r1 = 0;
    data.r2 = 1;
    return data;
}

IntMatrix c_matrix(const OrderData& data, const std::vector<Int>& c) {
    int d = data.f.degree();
    IntMatrix m(d, d);
    for (int i = 0; i < d; ++i)
        if (c[static_cast<size_t>(i)] != 0)
            m = m + data.btables[static_cast<size_t>(i)].scaled(c[static_cast<size_t>(i)]);
    return m;
}

std::vector<Int> reduce_to_domain(const OrderData& data, std::vector<Int> c) {
    int d = data.f.degree();
    bool all_zero = true;
    for (const auto& v : c)
        if (v != 0) all_zero = false;
    if (all_zero) throw error("reduce_to_domain: zero element");
    Int n = det(c_matrix(data, c));
    if (n < 0) {
        if (d % 2 == 0) throw error("reduce_to_domain: negative norm at even degree");
        for (auto& v : c) v = -v;
        n = -n;
    }
    if (data.units.empty()) return c;

    const OrderElement& eps = data.units.front();
    const OrderElement& eps_inv = data.unit_invs.front();
    double ve = std::log(element_embedding(eps, data.real_embedding));
    auto imbalance = [&](const std::vector<Int>& cc) {
        double x = element_embedding(element_from(cc), data.real_embedding);
        return std::log(std::fabs(x)) - std::log(n.convert_to<double>()) / d;
    };
    double v = imbalance(c);
    long long t = static_cast<long long>(-std::floor(v / ve));
    auto apply = [&](const OrderElement& unit, long long times) {
        for (long long i = 0; i < times; ++i)
            c = mul_elements(element_from(c), unit, data.f).coeffs;
    };
    if (t > 0) apply(eps, t);
    if (t < 0) apply(eps_inv, -t);
    // guard against rounding at the window edges
    while (imbalance(c) < 0) apply(eps, 1);
    while (imbalance(c) >= ve) apply(eps_inv, 1);
    return c;
}

ParamResult params_from_c(const OrderData& data, const std::vector<Int>& c_in) {
    int d = data.f.degree();
    if (static_cast<int>(c_in.size()) != d) throw error("params_from_c: wrong length");
    std::vector<Int> c = reduce_to_domain(data, c_in);
    IntMatrix C = c_matrix(data, c);

    std::vector<Int> w(static_cast<size_t>(d));
    for (int j = 1; j <= d; ++j) {
        Int minor = minor_det(C, j - 1, d - 1);
        w[static_cast<size_t>(j - 1)] = (j + d) % 2 == 0 ? minor : -minor;
    }
    Int g = w[0];
    for (const auto& v : w) g = gcd(g, v);
    if (abs(g) != 1) return {std::nullopt, abs(g)};

    std::vector<Int> u = gcd_completion(w);
    IntMatrix gamma_inv(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j + 1 < d; ++j) gamma_inv.at(i, j) = C.at(i, j);
        gamma_inv.at(i, d - 1) = u[static_cast<size_t>(i)];
    }
    if (det(gamma_inv) != 1) throw error("completion is not unimodular");
    IntMatrix gamma = adjugate(gamma_inv);
    IntMatrix r = gamma * C;
    Int m = r.at(d - 1, d - 1);
    if (m <= 0) throw error("nonpositive modulus");

    // shift u by columns of C so the last column of gamma * C lands in [0, m)
    for (int i = 0; i + 1 < d; ++i) {
        Int t = -floor_div(r.at(i, d - 1), m);
        if (t == 0) continue;
        for (int j = 0; j < d; ++j) {
            gamma.at(i, j) += t * gamma.at(d - 1, j);
            u[static_cast<size_t>(j)] -= t * C.at(j, i);
        }
        r.at(i, d - 1) += t * m;
    }

    for (int i = 0; i + 1 < d; ++i)
        for (int j = 0; j + 1 < d; ++j)
            if (r.at(i, j) != (i == j ? 1 : 0)) throw error("root matrix block is not identity");

    std::vector<Int> mu_powers(static_cast<size_t>(d - 1));
    for (int i = 0; i + 1 < d; ++i) mu_powers[static_cast<size_t>(i)] = mod_floor(-r.at(i, d - 1), m);
    Int mu = d >= 2 ? mu_powers[static_cast<size_t>(d - 2)] : Int(0);
    if (mod_floor(data.f.eval(mu), m) != 0) throw error("recovered mu is not a root");
    Int pw = mu;
    for (int i = d - 3; i >= 0; --i) {
        pw = mod_floor(pw * mu, m);
        if (mu_powers[static_cast<size_t>(i)] != pw) throw error("mu power slot mismatch");
    }
    if (r != root_to_ideal(data.f, {m, mu}).basis()) throw error("root matrix mismatch");

    int k = 1;
    for (int j = 2; j <= d; ++j)
        if (abs(w[static_cast<size_t>(j - 1)]) > abs(w[static_cast<size_t>(k - 1)])) k = j;

    return {ParamWitness{std::move(c), std::move(C), std::move(u), std::move(gamma),
                         std::move(m), std::move(mu_powers), k},
            1};
}

std::vector<Int> c_from_root(const OrderData& data, const RootClass& root, long long search_bound) {
    int d = data.f.degree();
    if (gcd(root.m, data.f.discriminant()) != 1)
        throw error("c_from_root: modulus must be coprime to the discriminant");
    long long bound = search_bound;
    if (bound <= 0)
        bound = static_cast<long long>(4 * std::pow(root.m.convert_to<double>(), 1.0 / d) + 4);
    IntMatrix target = root_to_ideal(data.f, root).basis();

    std::vector<Int> c(static_cast<size_t>(d), -bound);
    while (true) {
        bool all_zero = true;
        for (const auto& v : c)
            if (v != 0) all_zero = false;
        if (!all_zero) {
            IntMatrix C = c_matrix(data, c);
            Int n = det(C);
            if (n == root.m || -n == root.m) {
                std::vector<Int> cc = c;
                if (n < 0 && d % 2 == 1)
                    for (auto& v : cc) v = -v;
                if (hnf_upper(c_matrix(data, cc)).h == target) return reduce_to_domain(data, cc);
            }
        }
        int pos = d - 1;
        while (pos >= 0 && c[static_cast<size_t>(pos)] == bound) {
            c[static_cast<size_t>(pos)] = -bound;
            --pos;
        }
        if (pos < 0) break;
        c[static_cast<size_t>(pos)] += 1;
    }
    throw search_exhausted("no c-vector within bound " + std::to_string(bound));
}

HooleyResult hooley_params(const Int& c1, const Int& c2, const Int& c3) {
    static const OrderData data = order_data_cube2();
    const MonicPoly& f = data.f;
    if (gcd(gcd(c1, c2), c3) != 1) return {true, 0, 0, 0, 0, {}, {}};

    Int v1 = c2 * c2 - c1 * c3, v2 = 2 * c1 * c1 - c2 * c3, v3 = c3 * c3 - 2 * c1 * c2;
    Int m1 = gcd(gcd(v1, v2), v3);
    if (m1 == 0) return {true, 0, 0, 0, 0, {}, {}};

    std::vector<Int> cp{v1 / m1, v2 / m1, v3 / m1};
    // xi = c1 alpha^2 + c2 alpha + c3, xi' likewise from cp; fix the sign of
    // cp so that xi * xi' is a positive rational integer
    OrderElement xi{{c1, c2, c3}};
    OrderElement xip{{cp[0], cp[1], cp[2]}};
    OrderElement prod = mul_elements(xi, xip, f);
    if (prod.coeffs[0] != 0 || prod.coeffs[1] != 0 || prod.coeffs[2] == 0)
        return {true, 0, 0, 0, 0, {}, {}};
    if (prod.coeffs[2] < 0)
        for (auto& x : cp) x = -x;

    IntMatrix C = c_matrix(data, {c1, c2, c3});
    auto ideal = IdealHNF(f, hnf_upper(C).h);
    if (integer_content(ideal) != 1) return {true, 0, 0, 0, 0, {}, {}};
    auto readoff = ideal_to_pair(ideal);
    const RootPair& pair = readoff.pair;
    if (pair.m1 != m1) throw error("gcd does not match the ideal pivot");

    std::array<Int, 6> plucker{c3, c2, c1, cp[0], cp[1], cp[2]};
    if (plucker[0] * plucker[3] + plucker[1] * plucker[4] + plucker[2] * plucker[5] != 0)
        throw error("orthogonality of the coordinate pair failed");
    return {false, pair.m1, pair.mu1, pair.m2, pair.mu2, plucker, cp};
}

Approximation approximation(const OrderData& data, const ParamWitness& w) {
    int d = data.f.degree();
    int k = w.k;
    IntMatrix ckd(d - 1, d - 1);
    std::vector<Int> uk(static_cast<size_t>(d - 1));
    for (int i = 0, si = 0; i < d; ++i) {
        if (i == k - 1) continue;
        for (int j = 0; j + 1 < d; ++j) ckd.at(si, j) = w.C.at(i, j);
        uk[static_cast<size_t>(si)] = w.u[static_cast<size_t>(i)];
        ++si;
    }
    Int den = det(ckd);
    if (den == 0) throw error("approximation: singular minor");
    IntMatrix adj = adjugate(ckd);

    std::vector<Rat> point(static_cast<size_t>(d - 1));
    Rat deviation = 0;
    for (int i = 0; i + 1 < d; ++i) {
        Int num = 0;
        for (int j = 0; j + 1 < d; ++j) num += adj.at(i, j) * uk[static_cast<size_t>(j)];
        if (den < 0) num = -num;
        Rat p(num, abs(den));
        p -= Rat(floor_div(numerator(p), denominator(p)));
        point[static_cast<size_t>(i)] = p;
        Rat dist = torus_dist(Rat(w.mu_powers[static_cast<size_t>(i)], w.m) - p);
        if (dist > deviation) deviation = dist;
    }
    return {k, std::move(point), std::move(deviation)};
}

TorsionPointLattice torsion_lattice(const ParamWitness& w, long long coeff_box) {
    int d = w.C.rows();
    int k = w.k;
    IntMatrix ckd(d - 1, d - 1);
    for (int i = 0, si = 0; i < d; ++i) {
        if (i == k - 1) continue;
        for (int j = 0; j + 1 < d; ++j) ckd.at(si, j) = w.C.at(i, j);
        ++si;
    }
    Int q = abs(det(ckd));
    IntMatrix basis = adjugate(ckd);
    Int best = 0;
    if (d - 1 == 1) {
        best = q * q;
        basis.at(0, 0) = q;
    } else {
        std::vector<long long> coeff(static_cast<size_t>(d - 1), -coeff_box);
        while (true) {
            bool all_zero = true;
            for (auto v : coeff)
                if (v != 0) all_zero = false;
            if (!all_zero) {
                Int sq = 0;
                for (int row = 0; row + 1 < d; ++row) {
                    Int entry = 0;
                    for (int col = 0; col + 1 < d; ++col)
                        entry += Int(coeff[static_cast<size_t>(col)]) * basis.at(row, col);
                    sq += entry * entry;
                }
                if (sq > 0 && (best == 0 || sq < best)) best = sq;
            }
            int pos = d - 2;
            while (pos >= 0 && coeff[static_cast<size_t>(pos)] == coeff_box) {
                coeff[static_cast<size_t>(pos)] = -coeff_box;
                --pos;
            }
            if (pos < 0) break;
            coeff[static_cast<size_t>(pos)] += 1;
        }
    }
    return {std::move(q), std::move(basis), std::move(best)};
}

SpacingCensus spacing_census(const MonicPoly& f, long long M, double radius) {
    int d = f.degree();
    Int disc = f.discriminant();
    std::vector<std::vector<double>> points;
    for (long long m = M + 1; m <= 2 * M; ++m) {
        if (gcd(Int(m), disc) != 1) continue;
        for (const auto& r : roots_mod(f, m)) {
            std::vector<double> p(static_cast<size_t>(d - 1));
            Int pw = 1;
            for (int j = d - 2; j >= 0; --j) {
                pw = mod_floor(pw * r.mu, r.m);
                p[static_cast<size_t>(j)] = pw.convert_to<double>() / m;
            }
            points.push_back(std::move(p));
        }
    }
    SpacingCensus out{0, {}, static_cast<long long>(points.size())};
    for (const auto& a : points) {
        int occ = 0;
        for (const auto& b : points) {
            double dist = 0;
            for (size_t j = 0; j < a.size(); ++j) {
                double t = std::fabs(a[j] - b[j]);
                dist = std::max(dist, std::min(t, 1.0 - t));
            }
            if (dist <= radius) ++occ;
        }
        out.max_occupancy = std::max(out.max_occupancy, occ);
        out.histogram[occ] += 1;
    }
    return out;
}

} // namespace rootcong
