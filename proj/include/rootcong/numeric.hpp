#ifndef ROOTCONG_NUMERIC_HPP
#define ROOTCONG_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace rootcong {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct singular_matrix : error { using error::error; };
struct not_coprime : error { using error::error; };
struct invalid_poly : error { using error::error; };
struct not_a_root : error { using error::error; };
struct not_simple_root : error { using error::error; };
struct not_cyclic_quotient : error { using error::error; };
struct gcd_obstruction : error { using error::error; };
struct has_integer_content : error { using error::error; };
struct malformed_ideal : error { using error::error; };
struct ramified_input : error { using error::error; };
struct uniqueness_violation : error { using error::error; };
struct search_exhausted : error { using error::error; };
struct not_prime : error { using error::error; };
struct usage_error : error { using error::error; };

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

/// Representative of a mod m in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Extended gcd: returns g = gcd(a,b) >= 0 and (x,y) with a*x + b*y = g.
/// The Bezout pair is canonicalized so that, for b != 0, x is the smallest
/// non-negative solution modulo |b|/g.
struct ext_gcd_result {
    Int g, x, y;
};

inline ext_gcd_result ext_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    Int a0 = a, b0 = b;
    while (b0 != 0) {
        Int q = a0 / b0;
        Int t = a0 - q * b0; a0 = b0; b0 = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a0 < 0) { a0 = -a0; x0 = -x0; y0 = -y0; }
    if (b != 0 && a0 != 0) {
        Int step = abs(b) / a0;
        if (step != 0) {
            x0 = mod_floor(x0, step);
            y0 = (a0 - a * x0) / b;
        }
    }
    return {a0, x0, y0};
}

/// Inverse of a modulo m (m >= 1); throws not_coprime if gcd(a, m) != 1.
inline Int inv_mod(const Int& a, const Int& m) {
    if (m == 1) return 0;
    auto r = ext_gcd(mod_floor(a, m), m);
    if (r.g != 1) throw not_coprime("inv_mod: arguments not coprime");
    return mod_floor(r.x, m);
}

inline Int pow_mod(Int base, Int exp, const Int& m) {
    if (m == 1) return 0;
    Int result = 1;
    base = mod_floor(base, m);
    while (exp > 0) {
        if ((exp & 1) != 0) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

inline std::string to_string(const Int& v) { return v.str(); }

} // namespace rootcong

#endif
