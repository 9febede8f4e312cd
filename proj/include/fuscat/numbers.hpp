#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fuscat {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (coprime numerator, positive denominator) after canonicalize().
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// mpz_class has no long long constructor
inline Int make_int(long long v) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
    return Int(static_cast<long>(v));
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// floor(sqrt(n)) for n >= 0
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline int sign_of(const Int& n) { return sgn(n); }
inline int sign_of(const Rat& r) { return sgn(r); }

// "p/q" with the "/q" omitted for integers; lossless round trip
inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("to_long: value out of range");
    return n.get_si();
}

}  // namespace fuscat
