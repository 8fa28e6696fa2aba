// Arbitrary-precision rationals in canonical reduced form, backed by GMP.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace su3mult {

using Rational = mpq_class;

// Builds a canonical rational; the raw mpq_class(num, den) constructor does
// not reduce, so all construction funnels through here.
inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num", "-num" or "num/den". Throws on malformed input or den == 0.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational_from_string: empty");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse '" + text + "'");
    if (r.get_den() == 0) throw std::domain_error("rational_from_string: zero denominator");
    r.canonicalize();
    return r;
}

// "num/den" with reduced terms and positive denominator; integers print bare.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// r^e for integer e (negative e inverts; requires r != 0 then).
inline Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw std::domain_error("rational_pow: zero base, negative exponent");
        return Rational(0);
    }
    mpz_class num = r.get_num(), den = r.get_den();
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), k);
    Rational out;
    if (e > 0) {
        out = Rational(pn, pd);
    } else {
        out = Rational(pd, pn);
    }
    out.canonicalize();
    return out;
}

inline mpz_class factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace su3mult
