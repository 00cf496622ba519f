#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootcong/parameterization.hpp"

using namespace rootcong;

namespace {

const OrderData& cube2() {
    static OrderData d = order_data_cube2();
    return d;
}

const OrderData& gauss() {
    static OrderData d = order_data_gauss();
    return d;
}

IntMatrix mat3(std::vector<std::vector<long long>> rows) {
    IntMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = rows[i][j];
    return m;
}

IntMatrix mat2(std::vector<std::vector<long long>> rows) {
    IntMatrix m(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = rows[i][j];
    return m;
}

// walk every integer vector with entries in [-b, b]
template <typename F>
void for_each_box(int d, long long b, F&& fn) {
    std::vector<Int> c(static_cast<size_t>(d), -b);
    while (true) {
        fn(c);
        int pos = d - 1;
        while (pos >= 0 && c[static_cast<size_t>(pos)] == b) {
            c[static_cast<size_t>(pos)] = -b;
            --pos;
        }
        if (pos < 0) return;
        c[static_cast<size_t>(pos)] += 1;
    }
}

bool is_zero(const std::vector<Int>& c) {
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

} // namespace

TEST_CASE("multiplication tables of the cube root of 2") {
    const auto& data = cube2();
    CHECK(data.btables[0] == mat3({{0, 2, 0}, {0, 0, 2}, {1, 0, 0}}));
    CHECK(data.btables[1] == mat3({{0, 0, 2}, {1, 0, 0}, {0, 1, 0}}));
    CHECK(data.btables[2] == IntMatrix::identity(3));
    CHECK(c_matrix(data, {5, -3, 7}) ==
          mat3({{7, 10, -6}, {-3, 7, 10}, {5, -3, 7}}));
    // norm of 1 + alpha + alpha^2 is 1
    CHECK(det(c_matrix(data, {1, 1, 1})) == 1);
}

TEST_CASE("multiplication table of the gaussian integers") {
    const auto& data = gauss();
    CHECK(c_matrix(data, {3, 4}) == mat2({{4, -3}, {3, 4}}));
    CHECK(det(c_matrix(data, {3, 4})) == 25);
}

TEST_CASE("c_matrix is the multiplication matrix") {
    for (const OrderData* dp : {&cube2(), &gauss()}) {
        const auto& data = *dp;
        int d = data.f.degree();
        for_each_box(d, 2, [&](const std::vector<Int>& c) {
            IntMatrix C = c_matrix(data, c);
            OrderElement xi{c};
            for (int j = 0; j < d; ++j) {
                auto prod = mul_elements(xi, alpha_power(d, d - 1 - j), data.f);
                for (int k = 0; k < d; ++k)
                    CHECK(C.at(j, k) == prod.coeffs[static_cast<size_t>(k)]);
            }
        });
    }
}

TEST_CASE("reduce_to_domain") {
    const auto& data = cube2();
    auto mul = [&](std::vector<Int> a, std::vector<Int> b) {
        return mul_elements(OrderElement{a}, OrderElement{b}, data.f).coeffs;
    };
    std::vector<Int> eps{1, 1, 1};

    CHECK(reduce_to_domain(data, {0, 0, 1}) == std::vector<Int>{0, 0, 1});
    // the unit itself reduces to 1
    CHECK(reduce_to_domain(data, eps) == std::vector<Int>{0, 0, 1});
    CHECK(reduce_to_domain(data, mul(eps, eps)) == std::vector<Int>{0, 0, 1});
    // unit multiples of alpha + 2 all land on the same representative
    auto base = reduce_to_domain(data, {0, 1, 2});
    auto shifted = mul(eps, {0, 1, 2});
    CHECK(reduce_to_domain(data, shifted) == base);
    CHECK(reduce_to_domain(data, mul(eps, shifted)) == base);
    // negative norm flips sign first
    CHECK(reduce_to_domain(data, {0, 0, -1}) == std::vector<Int>{0, 0, 1});
    CHECK_THROWS_AS(reduce_to_domain(data, {0, 0, 0}), error);

    // without units only the sign is fixed
    CHECK(reduce_to_domain(gauss(), {1, 2}) == std::vector<Int>{1, 2});
}

TEST_CASE("reduce_to_domain output is unit-window canonical") {
    const auto& data = cube2();
    for_each_box(3, 4, [&](const std::vector<Int>& c) {
        if (is_zero(c)) return;
        auto r = reduce_to_domain(data, c);
        CHECK(abs(det(c_matrix(data, r))) == abs(det(c_matrix(data, c))));
        CHECK(reduce_to_domain(data, r) == r);  // idempotent
    });
}

TEST_CASE("params_from_c examples") {
    const auto& data = cube2();

    auto one = params_from_c(data, {0, 0, 1});
    REQUIRE_FALSE(one.degenerate());
    CHECK(one.witness->m == 1);
    CHECK(one.witness->C == IntMatrix::identity(3));

    auto w = params_from_c(data, {0, 1, 2});
    REQUIRE_FALSE(w.degenerate());
    CHECK(w.witness->m == 10);
    CHECK(w.witness->mu_powers == std::vector<Int>{4, 8});
    CHECK(w.witness->C == mat3({{2, 0, 2}, {1, 2, 0}, {0, 1, 2}}));
    CHECK(w.witness->k == 3);
    CHECK(det(w.witness->gamma) == 1);
    CHECK(w.witness->gamma * w.witness->C ==
          root_to_ideal(data.f, {10, 8}).basis());

    // alpha^2 has norm 4 and a non-cyclic quotient
    auto deg = params_from_c(data, {1, 0, 0});
    CHECK(deg.degenerate());
    CHECK(deg.failing_gcd == 2);
}

TEST_CASE("degenerate exactly when the quotient is not cyclic") {
    for (const OrderData* dp : {&cube2(), &gauss()}) {
        const auto& data = *dp;
        int d = data.f.degree();
        for_each_box(d, 3, [&](const std::vector<Int>& c) {
            if (is_zero(c)) return;
            auto res = params_from_c(data, c);
            auto inv = snf_diagonal(c_matrix(data, c));
            bool cyclic = d < 2 || inv[static_cast<size_t>(d - 2)] == 1;
            CHECK(res.degenerate() == !cyclic);
        });
    }
}

TEST_CASE("witness reconstructs the root ideal") {
    for (const OrderData* dp : {&cube2(), &gauss()}) {
        const auto& data = *dp;
        int d = data.f.degree();
        for_each_box(d, d == 3 ? 4 : 8, [&](const std::vector<Int>& c) {
            if (is_zero(c)) return;
            auto res = params_from_c(data, c);
            if (res.degenerate()) return;
            const auto& w = *res.witness;
            CHECK(det(w.gamma) == 1);
            CHECK(abs(det(w.C)) == w.m);
            Int mu = w.mu_powers[static_cast<size_t>(d - 2)];
            CHECK(mod_floor(data.f.eval(mu), w.m) == 0);
            CHECK(w.gamma * w.C == root_to_ideal(data.f, {w.m, mu}).basis());
            // the completion vector still pairs to 1 with the weights
            Int pairing = 0;
            for (int j = 1; j <= d; ++j) {
                Int minor = minor_det(w.C, j - 1, d - 1);
                Int wj = (j + d) % 2 == 0 ? minor : -minor;
                pairing += wj * w.u[static_cast<size_t>(j - 1)];
            }
            CHECK(pairing == 1);
        });
    }
}

TEST_CASE("unit action leaves the parameterized root fixed") {
    const auto& data = cube2();
    const auto& eps = data.units.front();
    for_each_box(3, 3, [&](const std::vector<Int>& c) {
        if (is_zero(c)) return;
        auto a = params_from_c(data, c);
        auto b = params_from_c(data, mul_elements(OrderElement{c}, eps, data.f).coeffs);
        CHECK(a.degenerate() == b.degenerate());
        if (a.degenerate()) return;
        CHECK(a.witness->m == b.witness->m);
        CHECK(a.witness->mu_powers == b.witness->mu_powers);
        CHECK(a.witness->c == b.witness->c);
    });
}

TEST_CASE("alternative completion vectors give the same root") {
    const auto& data = cube2();
    for_each_box(3, 3, [&](const std::vector<Int>& c) {
        if (is_zero(c)) return;
        auto res = params_from_c(data, c);
        if (res.degenerate()) return;
        const auto& w = *res.witness;
        for (int shift = 0; shift < 2; ++shift) {
            // adding a column of C to u keeps the completion determinant 1
            IntMatrix gamma_inv2(3, 3);
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 2; ++j) gamma_inv2.at(i, j) = w.C.at(i, j);
                gamma_inv2.at(i, 2) = w.u[static_cast<size_t>(i)] + w.C.at(i, shift);
            }
            REQUIRE(det(gamma_inv2) == 1);
            IntMatrix gamma2 = adjugate(gamma_inv2);
            IntMatrix r2 = gamma2 * w.C;
            CHECK(r2.at(2, 2) == w.m);
            for (int i = 0; i < 2; ++i)
                CHECK(mod_floor(-r2.at(i, 2), w.m) == w.mu_powers[static_cast<size_t>(i)]);
            // the two gammas differ by a unipotent matrix supported on the
            // last column
            IntMatrix rel = w.gamma * gamma_inv2;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    if (i == j)
                        CHECK(rel.at(i, j) == 1);
                    else if (j != 2)
                        CHECK(rel.at(i, j) == 0);
                }
            CHECK(rel.at(2, 0) == 0);
            CHECK(rel.at(2, 1) == 0);
        }
    });
}

TEST_CASE("c_from_root inverts params_from_c") {
    const auto& cube = cube2();
    for (long long m = 1; m <= 60; ++m) {
        if (gcd(Int(m), Int(6)) != 1) continue;
        for (const auto& r : roots_mod(cube.f, m)) {
            auto c = c_from_root(cube, r);
            auto res = params_from_c(cube, c);
            REQUIRE_FALSE(res.degenerate());
            CHECK(res.witness->m == r.m);
            if (m > 1) CHECK(res.witness->mu_powers[1] == r.mu);
            CHECK(res.witness->c == c);  // already reduced
        }
    }
    const auto& g = gauss();
    for (long long m = 1; m <= 60; ++m) {
        if (gcd(Int(m), Int(2)) != 1) continue;
        for (const auto& r : roots_mod(g.f, m)) {
            auto c = c_from_root(g, r);
            auto res = params_from_c(g, c);
            REQUIRE_FALSE(res.degenerate());
            CHECK(res.witness->m == r.m);
            if (m > 1) CHECK(res.witness->mu_powers[0] == r.mu);
        }
    }
    CHECK_THROWS_AS(c_from_root(cube, {31, 4}, 1), search_exhausted);
    CHECK_THROWS_AS(c_from_root(cube, {2, 0}), error);
}

TEST_CASE("hooley_params examples") {
    auto a = hooley_params(1, 0, 0);
    REQUIRE_FALSE(a.degenerate);
    CHECK(a.m1 == 2);
    CHECK(a.mu1 == 0);
    CHECK(a.m2 == 1);
    CHECK(a.cprime == std::vector<Int>{0, 1, 0});

    auto b = hooley_params(0, 1, 2);
    REQUIRE_FALSE(b.degenerate);
    CHECK(b.m1 == 1);
    CHECK(b.m2 == 10);
    CHECK(b.mu2 == 8);
    CHECK(b.cprime == std::vector<Int>{1, -2, 4});
    CHECK(b.plucker == std::array<Int, 6>{2, 1, 0, 1, -2, 4});

    CHECK(hooley_params(2, 0, 0).degenerate);
    CHECK(hooley_params(2, 2, 4).degenerate);
}

TEST_CASE("hooley_params matches the lattice read-off") {
    const auto& data = cube2();
    for_each_box(3, 5, [&](const std::vector<Int>& c) {
        if (is_zero(c)) return;
        if (gcd(gcd(c[0], c[1]), c[2]) != 1) return;
        auto h = hooley_params(c[0], c[1], c[2]);
        IntMatrix C = c_matrix(data, c);
        auto ideal = IdealHNF(data.f, hnf_upper(C).h);
        if (h.degenerate) {
            CHECK(integer_content(ideal) > 1);
            return;
        }
        auto readoff = ideal_to_pair(ideal);
        CHECK(h.m1 == readoff.pair.m1);
        CHECK(h.mu1 == readoff.pair.mu1);
        CHECK(h.m2 == readoff.pair.m2);
        CHECK(h.mu2 == readoff.pair.mu2);
        // m1 is the gcd of the bilinear coordinate vector
        Int v1 = c[1] * c[1] - c[0] * c[2];
        Int v2 = 2 * c[0] * c[0] - c[1] * c[2];
        Int v3 = c[2] * c[2] - 2 * c[0] * c[1];
        CHECK(h.m1 == gcd(gcd(v1, v2), v3));
        // the two coordinate triples are orthogonal
        CHECK(h.plucker[0] * h.plucker[3] + h.plucker[1] * h.plucker[4] +
                  h.plucker[2] * h.plucker[5] ==
              0);
        // xi * xi' is the positive integer m1 * m2
        auto prod = mul_elements(OrderElement{c},
                                 OrderElement{h.cprime}, data.f);
        CHECK(prod.coeffs[0] == 0);
        CHECK(prod.coeffs[1] == 0);
        CHECK(prod.coeffs[2] == h.m1 * h.m2);
    });
}

TEST_CASE("approximation") {
    const auto& data = cube2();
    auto res = params_from_c(data, {0, 1, 2});
    auto ap = approximation(data, *res.witness);
    CHECK(ap.k == 3);
    for (const auto& p : ap.point) {
        CHECK(p >= 0);
        CHECK(p < 1);
        Rat scaled = p * 4;
        CHECK(denominator(scaled) == 1);  // |det C_33| = 4
    }
    CHECK(ap.deviation >= 0);
    CHECK(ap.deviation <= Rat(1, 2));

    for_each_box(3, 3, [&](const std::vector<Int>& c) {
        if (is_zero(c)) return;
        auto r = params_from_c(data, c);
        if (r.degenerate()) return;
        auto a = approximation(data, *r.witness);
        CHECK(a.k == r.witness->k);
        for (const auto& p : a.point) {
            CHECK(p >= 0);
            CHECK(p < 1);
        }
        CHECK(a.deviation <= Rat(1, 2));
    });
}

TEST_CASE("torsion_lattice") {
    const auto& data = cube2();
    auto res = params_from_c(data, {0, 1, 2});
    auto tl = torsion_lattice(*res.witness);
    CHECK(tl.q == 4);
    CHECK(tl.basis == mat2({{2, 0}, {-1, 2}}));
    CHECK(tl.shortest_sq == 4);

    for_each_box(3, 3, [&](const std::vector<Int>& c) {
        if (is_zero(c)) return;
        auto r = params_from_c(data, c);
        if (r.degenerate()) return;
        auto t = torsion_lattice(*r.witness, 6);
        CHECK(t.q > 0);
        CHECK(t.shortest_sq > 0);
        // q * e_i always lies in the lattice, so the shortest vector is at
        // most that long
        CHECK(t.shortest_sq <= t.q * t.q);
    });
}

TEST_CASE("spacing_census") {
    auto f = MonicPoly({0, 0, -2});
    auto census = spacing_census(f, 10, 0.05);
    long long expected = 0;
    for (long long m = 11; m <= 20; ++m) {
        if (gcd(Int(m), f.discriminant()) != 1) continue;
        expected += static_cast<long long>(roots_mod(f, m).size());
    }
    CHECK(census.points == expected);
    CHECK(census.max_occupancy >= 1);
    long long total = 0;
    for (const auto& [occ, n] : census.histogram) {
        CHECK(occ >= 1);
        CHECK(occ <= census.max_occupancy);
        total += n;
    }
    CHECK(total == census.points);

    // a ball of radius 1/2 in the max norm covers the whole torus
    auto all = spacing_census(f, 5, 0.5);
    CHECK(all.max_occupancy == all.points);

    // deterministic
    auto again = spacing_census(f, 10, 0.05);
    CHECK(again.max_occupancy == census.max_occupancy);
    CHECK(again.histogram == census.histogram);
}
