#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "rootcong/composition.hpp"
#include "rootcong/parameterization.hpp"
#include "rootcong/zeta.hpp"

#ifdef ROOTCONG_OPENMP
#include <omp.h>
#endif

using nlohmann::json;
using namespace rootcong;

namespace {

std::vector<Int> parse_ints(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(Int(tok));
    return out;
}

MonicPoly parse_poly(const std::string& s, bool trust) {
    return MonicPoly(parse_ints(s), trust);
}

json j_int(const Int& v) { return v.str(); }

json j_ints(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(j_int(x));
    return a;
}

json j_matrix(const IntMatrix& m) {
    json a = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(j_int(m.at(i, j)));
        a.push_back(row);
    }
    return a;
}

json j_ideal(const IdealHNF& i) {
    return {{"F", j_ints(i.poly().coeffs())}, {"B", j_matrix(i.basis())}};
}

json j_pair(const RootPair& p) {
    return {{"m1", j_int(p.m1)}, {"mu1", j_int(p.mu1)},
            {"m2", j_int(p.m2)}, {"mu2", j_int(p.mu2)},
            {"lambda", j_int(p.lambda)}};
}

std::string rat_str(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int verify_report(const std::string& what, long long pass, long long fail) {
    std::cout << "verify " << what << ": " << pass << " passed, " << fail << " failed\n";
    return fail == 0 ? 0 : 1;
}

OrderData order_data_for(const MonicPoly& f) {
    if (f == MonicPoly({0, 0, -2})) return order_data_cube2();
    if (f == MonicPoly({0, 1})) return order_data_gauss();
    return make_order_data(f);
}

struct Options {
    std::string poly = "0,0,-2";
    bool trust = false;
    std::string format = "text";
    bool verify = false;
    long long seed = 0;
    int threads = 0;
    long long m = 0, m_max = 0;
    long long mu = 0;
    long long m1 = 1, mu1 = 0, m2 = 1, mu2 = 0;
    long long n1 = 1, nu1 = 0, n2 = 1, nu2 = 0;
    long long n = 0, nu = 0;
    std::string c;
    long long bound = 0;
    double radius = 0.0;
    bool histogram = false;
    bool pairs_mode = false;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--poly", o.poly, "monic polynomial a1,...,ad (leading coefficient implied)");
    cmd->add_flag("--trust-irreducible", o.trust, "skip the irreducibility check for degree >= 4");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_flag("--verify", o.verify, "run the oracle cross-check and report pass/fail");
    cmd->add_option("--seed", o.seed, "seed for sampled suites");
    cmd->add_option("--threads", o.threads, "worker thread count (0 = default)");
}

int cmd_roots(const Options& o) {
    MonicPoly f = parse_poly(o.poly, o.trust);
    long long last = o.m_max > 0 ? o.m_max : o.m;
    int failures = 0;
    for (long long m = o.m; m <= last; ++m) {
        auto roots = roots_mod(f, m);
        if (o.format == "json") {
            json a = json::array();
            for (const auto& r : roots) a.push_back(j_int(r.mu));
            emit({{"schema", 1}, {"m", m}, {"roots", a}});
        } else {
            std::cout << m << ":";
            for (const auto& r : roots) std::cout << " " << r.mu;
            std::cout << "\n";
        }
        if (o.verify)
            for (const auto& r : roots)
                if (mod_floor(f.eval(r.mu), r.m) != 0) ++failures;
    }
    if (o.verify) return verify_report("roots", 0, failures);
    return 0;
}

int cmd_ideal(const Options& o) {
    MonicPoly f = parse_poly(o.poly, o.trust);
    auto ideal = root_to_ideal(f, {o.m, o.mu});
    json j = j_ideal(ideal);
    j["schema"] = 1;
    emit(j);
    if (o.verify) {
        long long fail = ideal_to_root(ideal) == RootClass{o.m, o.mu} ? 0 : 1;
        return verify_report("ideal", 1 - fail, fail);
    }
    return 0;
}

int cmd_pair(const Options& o) {
    MonicPoly f = parse_poly(o.poly, o.trust);
    auto pair = make_pair(f, o.mu1, o.m1, o.mu2, o.m2);
    auto ideal = pair_to_ideal(f, pair);
    json j = j_ideal(ideal);
    j["schema"] = 1;
    j["pair"] = j_pair(pair);
    emit(j);
    if (o.verify) {
        auto readoff = ideal_to_pair(ideal);
        long long fail = readoff.pair == pair ? 0 : 1;
        return verify_report("pair", 1 - fail, fail);
    }
    return 0;
}

int cmd_compose(const Options& o) {
    MonicPoly f = parse_poly(o.poly, o.trust);
    json j{{"schema", 1}};
    long long failures = 0;
    if (o.pairs_mode) {
        auto p = make_pair(f, o.mu1, o.m1, o.mu2, o.m2);
        auto q = make_pair(f, o.nu1, o.n1, o.nu2, o.n2);
        auto res = compose_pairs(f, p, q);
        if (res.status == ComposePairsResult::Status::Composed) {
            j["status"] = "composed";
            j["result"] = j_pair(*res.pair);
            j["l"] = j_int(res.l);
            if (o.verify) {
                auto product = multiply(pair_to_ideal(f, p), pair_to_ideal(f, q));
                if (ideal_to_pair(product).pair != *res.pair) ++failures;
            }
        } else {
            j["status"] = "integer_divisible";
            j["result"] = j_ideal(*res.product);
            if (o.verify &&
                *res.product != multiply(pair_to_ideal(f, p), pair_to_ideal(f, q)))
                ++failures;
        }
    } else {
        auto res = compose_roots(f, {o.m, o.mu}, {o.n, o.nu});
        if (res.status == ComposeRootsResult::Status::Composed) {
            j["status"] = "composed";
            j["result"] = {{"m", j_int(res.root->m)}, {"mu", j_int(res.root->mu)}};
            if (o.verify) {
                auto product = multiply(root_to_ideal(f, {o.m, o.mu}),
                                        root_to_ideal(f, {o.n, o.nu}));
                if (ideal_to_root(product) != *res.root) ++failures;
            }
        } else {
            j["status"] = "non_cyclic";
            j["result"] = j_ideal(*res.product);
            if (o.verify && *res.product != multiply(root_to_ideal(f, {o.m, o.mu}),
                                                     root_to_ideal(f, {o.n, o.nu})))
                ++failures;
        }
    }
    emit(j);
    if (o.verify) return verify_report("compose", 1 - failures, failures);
    return 0;
}

int cmd_param(const Options& o) {
    MonicPoly f = parse_poly(o.poly, o.trust);
    OrderData data = order_data_for(f);
    std::vector<Int> c;
    if (!o.c.empty())
        c = parse_ints(o.c);
    else
        c = c_from_root(data, {o.m, o.mu});
    auto res = params_from_c(data, c);
    json j{{"schema", 1}};
    if (res.degenerate()) {
        j["degenerate"] = true;
        j["failing_gcd"] = j_int(res.failing_gcd);
        emit(j);
        return 0;
    }
    const auto& w = *res.witness;
    j["degenerate"] = false;
    j["c"] = j_ints(w.c);
    j["C"] = j_matrix(w.C);
    j["u"] = j_ints(w.u);
    j["gamma"] = j_matrix(w.gamma);
    j["m"] = j_int(w.m);
    j["mu_powers"] = j_ints(w.mu_powers);
    emit(j);
    if (o.verify) {
        int d = f.degree();
        Int mu = w.mu_powers[static_cast<size_t>(d - 2)];
        long long pass = 0, fail = 0;
        (w.gamma * w.C == root_to_ideal(f, {w.m, mu}).basis() ? pass : fail) += 1;
        (det(w.gamma) == 1 ? pass : fail) += 1;
        (abs(det(w.C)) == w.m ? pass : fail) += 1;
        return verify_report("param", pass, fail);
    }
    return 0;
}

int cmd_zeta(const Options& o) {
    auto euler = euler_cotype_coefficients(o.bound);
    auto direct = enumerate_ideals_by_cotype(o.bound);
    bool all_match = true;
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& [cot, n] : euler) {
            long long dn = direct.count(cot) ? direct.at(cot) : 0;
            bool match = dn == n;
            all_match = all_match && match;
            rows.push_back({{"N1", j_int(cot.n1)}, {"N2", j_int(cot.n2)},
                            {"N3", j_int(cot.n3)}, {"euler", n},
                            {"enumeration", dn}, {"match", match}});
        }
        emit({{"schema", 1}, {"cotypes", rows}});
    } else {
        std::cout << "N1,N2,N3,count,source,match\n";
        for (const auto& [cot, n] : euler) {
            long long dn = direct.count(cot) ? direct.at(cot) : 0;
            bool match = dn == n;
            all_match = all_match && match;
            std::cout << cot.n1 << "," << cot.n2 << "," << cot.n3 << "," << n
                      << ",euler," << (match ? 1 : 0) << "\n";
            std::cout << cot.n1 << "," << cot.n2 << "," << cot.n3 << "," << dn
                      << ",enumeration," << (match ? 1 : 0) << "\n";
        }
    }
    return all_match ? 0 : 1;
}

int cmd_census(const Options& o) {
    MonicPoly f = parse_poly(o.poly, o.trust);
    long long M = o.bound;
    double radius = o.radius > 0 ? o.radius : 1.0 / static_cast<double>(M);
    if (o.histogram) {
        auto census = spacing_census(f, M, radius);
        if (o.format == "json") {
            json h = json::object();
            for (const auto& [occ, n] : census.histogram) h[std::to_string(occ)] = n;
            emit({{"schema", 1}, {"points", census.points},
                  {"max_occupancy", census.max_occupancy}, {"histogram", h}});
        } else {
            std::cout << "occupancy,points\n";
            for (const auto& [occ, n] : census.histogram)
                std::cout << occ << "," << n << "\n";
        }
        return 0;
    }
    OrderData data = order_data_for(f);
    int d = f.degree();
    std::cout << "m,mu";
    for (int j = 0; j + 1 < d; ++j) std::cout << ",p" << (j + 1);
    std::cout << ",denominator,m_error\n";
    long long fail = 0;
    for (long long m = M + 1; m <= 2 * M; ++m) {
        if (gcd(Int(m), f.discriminant()) != 1) continue;
        for (const auto& r : roots_mod(f, m)) {
            auto c = c_from_root(data, r);
            auto res = params_from_c(data, c);
            if (res.degenerate()) {
                ++fail;
                continue;
            }
            auto ap = approximation(data, *res.witness);
            std::cout << m << "," << r.mu;
            Int qmax = 1;
            for (const auto& p : ap.point) {
                std::cout << "," << rat_str(p);
                Int den = denominator(p);
                if (den > qmax) qmax = den;
            }
            Rat merr = ap.deviation * m;
            std::cout << "," << qmax.str() << "," << rat_str(merr) << "\n";
        }
    }
    if (o.verify) return verify_report("census", 0, fail);
    return fail == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for roots of polynomial congruences"};
    app.require_subcommand(1);
    Options o;

    auto* roots = app.add_subcommand("roots", "roots of F mod m");
    add_common(roots, o);
    roots->add_option("--m", o.m, "modulus")->required();
    roots->add_option("--m-max", o.m_max, "upper end of modulus range");

    auto* ideal = app.add_subcommand("ideal", "HNF ideal attached to a root");
    add_common(ideal, o);
    ideal->add_option("--m", o.m)->required();
    ideal->add_option("--mu", o.mu)->required();

    auto* pair = app.add_subcommand("pair", "cubic pair ideal");
    add_common(pair, o);
    pair->add_option("--m1", o.m1)->required();
    pair->add_option("--mu1", o.mu1)->required();
    pair->add_option("--m2", o.m2)->required();
    pair->add_option("--mu2", o.mu2)->required();

    auto* compose = app.add_subcommand("compose", "compose roots or pairs");
    add_common(compose, o);
    compose->add_flag("--pairs", o.pairs_mode, "compose cubic pairs instead of roots");
    compose->add_option("--m", o.m);
    compose->add_option("--mu", o.mu);
    compose->add_option("--n", o.n);
    compose->add_option("--nu", o.nu);
    compose->add_option("--m1", o.m1);
    compose->add_option("--mu1", o.mu1);
    compose->add_option("--m2", o.m2);
    compose->add_option("--mu2", o.mu2);
    compose->add_option("--n1", o.n1);
    compose->add_option("--nu1", o.nu1);
    compose->add_option("--n2", o.n2);
    compose->add_option("--nu2", o.nu2);

    auto* param = app.add_subcommand("param", "parameterization witness for a root");
    add_common(param, o);
    param->add_option("--c", o.c, "coefficient vector c1,...,cd");
    param->add_option("--m", o.m);
    param->add_option("--mu", o.mu);

    auto* zeta = app.add_subcommand("zeta", "cotype counts");
    auto* cotype = zeta->add_subcommand("cotype", "Euler product vs enumeration");
    add_common(cotype, o);
    cotype->add_option("--bound", o.bound, "norm bound")->required();
    zeta->require_subcommand(1);

    auto* census = app.add_subcommand("census", "root points with M < m <= 2M");
    add_common(census, o);
    census->add_option("--bound", o.bound, "lower end M of the modulus window")->required();
    census->add_option("--radius", o.radius, "ball radius (default 1/M)");
    census->add_flag("--histogram", o.histogram, "print the spacing histogram instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

#ifdef ROOTCONG_OPENMP
    if (o.threads > 0) omp_set_num_threads(o.threads);
#endif

    try {
        if (roots->parsed()) return cmd_roots(o);
        if (ideal->parsed()) return cmd_ideal(o);
        if (pair->parsed()) return cmd_pair(o);
        if (compose->parsed()) return cmd_compose(o);
        if (param->parsed()) return cmd_param(o);
        if (zeta->parsed()) return cmd_zeta(o);
        if (census->parsed()) return cmd_census(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
