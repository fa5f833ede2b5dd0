#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "pbv/errors.hpp"

namespace pbv {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 for all
// arithmetic results; only raw (num,den) construction needs canonicalize().
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero();
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string::npos) {
        r = Rat(mpz_class(s));
    } else {
        mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw DivisionByZero("zero denominator in rational literal " + s);
        r = Rat(n, d);
        r.canonicalize();
    }
    return r;
}

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

inline int sign(const Rat& r) { return sgn(r); }

// gcd of absolute values; gcd(a/b, c/d) = gcd(a,c)/lcm(b,d). Zero arguments
// are absorbed: gcd(0, x) = |x|.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    mpz_class gn, lcm_d;
    mpz_gcd(gn.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(lcm_d.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Rat r(gn, lcm_d);
    r.canonicalize();
    return r;
}

// Exact square root when the argument is a perfect square of a rational.
inline std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (r == 0) return Rat(0);
    mpz_class sn, sd, rem;
    mpz_sqrtrem(sn.get_mpz_t(), rem.get_mpz_t(), r.get_num_mpz_t());
    if (rem != 0) return std::nullopt;
    mpz_sqrtrem(sd.get_mpz_t(), rem.get_mpz_t(), r.get_den_mpz_t());
    if (rem != 0) return std::nullopt;
    Rat s(sn, sd);
    s.canonicalize();
    return s;
}

inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace pbv
