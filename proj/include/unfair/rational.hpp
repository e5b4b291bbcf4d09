#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unfair {

// Exact arithmetic types. mpq_class keeps values reduced with a positive
// denominator, which is exactly the Rational invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Int& num, const Int& den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sgn(const Rational& r) { return sgn(r.get_num()); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a > b ? a : b; }

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_set_ui(num.get_den_mpz_t(), 1);
    mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), e);
    mpz_set_ui(den.get_den_mpz_t(), 1);
    return num / den;
}

inline Int int_pow(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// Parses "p/q", plain integers, and decimal literals like "-0.125".
Rational parse_rational(const std::string& text);

// Fixed-point decimal rendering of r, rounded to the nearest multiple of
// 10^-digits (ties away from zero).
std::string to_decimal_string(const Rational& r, int digits);

}  // namespace unfair
