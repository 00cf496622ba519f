#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "rootcong/correspondence.hpp"

using namespace rootcong;

namespace {

MonicPoly cube2() { return MonicPoly({0, 0, -2}); }

IntMatrix mat3(std::vector<long long> v) {
    IntMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = v[static_cast<size_t>(i) * 3 + j];
    return m;
}

} // namespace

TEST_CASE("root_to_ideal examples") {
    auto f = cube2();
    auto i = root_to_ideal(f, {10, 8});
    CHECK(i.basis() == mat3({1, 0, 6, 0, 1, 2, 0, 0, 10}));

    CHECK(root_to_ideal(f, {1, 0}) == IdealHNF::whole_ring(f));

    MonicPoly g({0, 1});
    auto i2 = root_to_ideal(g, {5, 2});
    IntMatrix expect(2, 2);
    expect.at(0, 0) = 1; expect.at(0, 1) = 3; expect.at(1, 1) = 5;
    CHECK(i2.basis() == expect);

    CHECK_THROWS_AS(root_to_ideal(f, {5, 2}), not_a_root);
}

TEST_CASE("ideal_to_root examples") {
    auto f = cube2();
    IdealHNF i(f, mat3({1, 0, 6, 0, 1, 2, 0, 0, 10}));
    CHECK(ideal_to_root(i) == RootClass{10, 8});
    CHECK(ideal_to_root(IdealHNF::whole_ring(f)) == RootClass{1, 0});
    IdealHNF p2(f, hnf_upper(mat3({1, 3, 9, 0, 5, 0, 0, 0, 5})).h);
    CHECK_THROWS_AS(ideal_to_root(p2), not_cyclic_quotient);
}

TEST_CASE("roundtrip single roots m <= 200") {
    auto f = cube2();
    for (long long m = 1; m <= 200; ++m)
        for (const auto& r : roots_mod(f, m)) {
            auto i = root_to_ideal(f, r);
            CHECK(invariant_factors(i) == std::vector<Int>{m, 1, 1});
            CHECK(ideal_to_root(i) == r);
        }
}

TEST_CASE("solve_lambda degenerate sides") {
    auto f = cube2();
    // m2 = 1: lambda = mu1^2 + a1 mu1 + a2 mod m1
    auto s = solve_lambda(f, 3, 5, 0, 1);
    CHECK(s.lambda == mod_floor(Int(9), 5));
    // m1 = 1: lambda = -mu2^2 - mu1 mu2 - a1 mu2 mod m2
    auto s2 = solve_lambda(f, 0, 1, 3, 5);
    CHECK(s2.lambda == mod_floor(Int(-9), 5));
    // equal moduli: both congruences collapse mod 31
    auto s3 = solve_lambda(f, 4, 31, 7, 31);
    CHECK(mod_floor(s3.lambda, 31) == 16);
    CHECK(mod_floor(s3.lambda + 77, 31) == 0);
    CHECK(mod_floor(s3.mbar1 * 1 + s3.mbar2 * 1, 31) != 0);  // mbar1*m1/g + mbar2*m2/g = 1
    CHECK(s3.mbar1 + s3.mbar2 == 1);
    CHECK_THROWS_AS(solve_lambda(f, 3, 5, 3, 5), gcd_obstruction);
}

TEST_CASE("lambda congruences always hold") {
    auto f = cube2();
    const Int &a1 = f.a(1), &a2 = f.a(2);
    for (long long m1 = 1; m1 <= 25; ++m1)
        for (long long m2 = 1; m2 <= 25; ++m2)
            for (const auto& r1 : roots_mod(f, m1))
                for (const auto& r2 : roots_mod(f, m2)) {
                    if (gcd(gcd(Int(m1), Int(m2)), r1.mu - r2.mu) != 1) continue;
                    auto s = solve_lambda(f, r1.mu, m1, r2.mu, m2);
                    CHECK(mod_floor(s.lambda - (r1.mu * r1.mu + a1 * r1.mu + a2), m1) == 0);
                    CHECK(mod_floor(s.lambda + r2.mu * r2.mu + r1.mu * r2.mu + a1 * r2.mu, m2) == 0);
                }
}

TEST_CASE("lambda invariance under Bezout cofactor shifts") {
    auto f = cube2();
    const Int &a1 = f.a(1), &a2 = f.a(2);
    Int m1 = 31, m2 = 62;  // g = 31
    // mu1 - mu2 must be invertible mod 31
    for (const auto& r1 : roots_mod(f, m1))
        for (const auto& r2 : roots_mod(f, m2)) {
            Int g = gcd(m1, m2);
            if (gcd(g, r1.mu - r2.mu) != 1) continue;
            auto s = solve_lambda(f, r1.mu, m1, r2.mu, m2);
            for (long long l = -3; l <= 3; ++l) {
                Int mb1 = s.mbar1 + l * (m2 / g), mb2 = s.mbar2 - l * (m1 / g);
                CHECK(mb1 * (m1 / g) + mb2 * (m2 / g) == 1);
                Int lhs = (f.eval(r1.mu) / m1) * mb2 + (f.eval(r2.mu) / m2) * mb1;
                Int kap = mod_floor(-lhs * inv_mod(r1.mu - r2.mu, g), g);
                Int lam = (r1.mu * r1.mu + a1 * r1.mu + a2) * mb2 * (m2 / g)
                        - (r2.mu * r2.mu + r1.mu * r2.mu + a1 * r2.mu) * mb1 * (m1 / g)
                        + kap * m1 * (m2 / g);
                CHECK(mod_floor(lam, m1 * m2) == s.lambda);
            }
        }
}

TEST_CASE("pair_to_ideal examples") {
    auto f = cube2();
    auto i1 = pair_to_ideal(f, make_pair(f, 0, 1, 3, 5));
    CHECK(i1.basis() == mat3({1, 0, 1, 0, 1, 2, 0, 0, 5}));

    auto i2 = pair_to_ideal(f, make_pair(f, 3, 5, 0, 1));
    CHECK(i2.basis() == mat3({1, 3, 4, 0, 5, 0, 0, 0, 5}));

    auto i3 = pair_to_ideal(f, make_pair(f, 20, 31, 0, 1));
    CHECK(i3.basis().at(0, 1) == 20);
    CHECK(i3.basis().at(1, 1) == 31);
    CHECK(i3.basis().at(2, 2) == 31);
    CHECK(norm(i3) == 961);
    CHECK(integer_content(i3) == 1);
}

TEST_CASE("ideal_to_pair examples") {
    auto f = cube2();
    auto r1 = ideal_to_pair(IdealHNF(f, mat3({1, 0, 6, 0, 1, 2, 0, 0, 10})));
    CHECK(r1.pair.m1 == 1);
    CHECK(r1.pair.m2 == 10);
    CHECK(r1.pair.mu2 == 8);

    auto r2 = ideal_to_pair(IdealHNF(f, hnf_upper(mat3({1, 3, 9, 0, 5, 0, 0, 0, 5})).h));
    CHECK(r2.pair.m1 == 5);
    CHECK(r2.pair.mu1 == 3);
    CHECK(r2.pair.m2 == 1);
    CHECK(r2.pair.mu2 == 0);

    auto r3 = ideal_to_pair(IdealHNF::whole_ring(f));
    CHECK(r3.pair == RootPair{1, 0, 1, 0, 0});

    CHECK_THROWS_AS(ideal_to_pair(IdealHNF(f, IntMatrix::identity(3).scaled(2))),
                    has_integer_content);
}

TEST_CASE("roundtrip pairs with norm <= 500") {
    auto f = cube2();
    for (long long m1 = 1; m1 * m1 <= 500; ++m1)
        for (long long m2 = 1; m1 * m1 * m2 <= 500; ++m2)
            for (const auto& r1 : roots_mod(f, m1))
                for (const auto& r2 : roots_mod(f, m2)) {
                    if (gcd(gcd(Int(m1), Int(m2)), r1.mu - r2.mu) != 1) continue;
                    auto pair = make_pair(f, r1.mu, m1, r2.mu, m2);
                    auto ideal = pair_to_ideal(f, pair);
                    CHECK(integer_content(ideal) == 1);
                    CHECK(norm(ideal) == Int(m1) * m1 * m2);
                    auto back = ideal_to_pair(ideal);
                    CHECK(back.pair == pair);
                }
}

TEST_CASE("pair bijection with enumeration, norms <= 60 coprime to 6") {
    auto f = cube2();
    for (long long n = 1; n <= 60; ++n) {
        if (gcd(Int(n), Int(6)) != 1) continue;
        std::set<IdealHNF> from_pairs;
        for (long long m1 = 1; m1 * m1 <= n; ++m1) {
            if (n % (m1 * m1) != 0) continue;
            long long m2 = n / (m1 * m1);
            for (const auto& r1 : roots_mod(f, m1))
                for (const auto& r2 : roots_mod(f, m2)) {
                    if (gcd(gcd(Int(m1), Int(m2)), r1.mu - r2.mu) != 1) continue;
                    from_pairs.insert(pair_to_ideal(f, make_pair(f, r1.mu, m1, r2.mu, m2)));
                }
        }
        std::set<IdealHNF> from_enum;
        for (const auto& i : enumerate_ideals_of_norm(f, n))
            if (integer_content(i) == 1) from_enum.insert(i);
        CHECK(from_pairs == from_enum);
    }
}

TEST_CASE("gcd obstruction plus glue consistency forces discriminant primes") {
    // a prime dividing m1, m2 and mu1 - mu2 divides the discriminant as soon
    // as the pair is consistent enough to come from an ideal, i.e. when
    // mu1^2 + mu1 mu2 + mu2^2 + a1(mu1 + mu2) + a2 = 0 mod p as well
    auto f = cube2();
    const Int &a1 = f.a(1), &a2 = f.a(2);
    bool obstructed_seen = false;
    for (long long m1 = 1; m1 <= 60; ++m1)
        for (long long m2 = 1; m2 <= 60; ++m2)
            for (const auto& r1 : roots_mod(f, m1))
                for (const auto& r2 : roots_mod(f, m2)) {
                    Int g = gcd(gcd(Int(m1), Int(m2)), r1.mu - r2.mu);
                    if (g == 1) continue;
                    obstructed_seen = true;
                    for (const auto& [p, e] : factorize(g)) {
                        Int glue = r1.mu * r1.mu + r1.mu * r2.mu + r2.mu * r2.mu +
                                   a1 * (r1.mu + r2.mu) + a2;
                        if (mod_floor(glue, p) != 0) continue;
                        CHECK(f.discriminant() % p == 0);
                    }
                }
    CHECK(obstructed_seen);
}
