#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ordcalc {

// Everything symbolic in this library computes over exact rationals (or
// extensions of them); no coefficient is ever rounded.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a" or "a/b", optionally signed.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline bool rational_is_integer(const Rational& r) {
    return mpz_cmp_ui(mpq_denref(r.get_mpq_t()), 1) == 0;
}

inline Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw std::domain_error("rational_pow: zero base, negative exponent");
        return Rational(0);
    }
    const unsigned long mag = exp < 0 ? static_cast<unsigned long>(-exp)
                                      : static_cast<unsigned long>(exp);
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), mag);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), mag);
    if (exp < 0) mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    return out;
}

}  // namespace ordcalc
