/*
    numeric.hpp

    Scalar layer: arbitrary-precision integers and rationals (GMP) plus the
    handful of helpers the rest of the library leans on.
*/
#ifndef BIORDER_NUMERIC_HPP
#define BIORDER_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace biorder {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int abs(const Int& a) { return ::abs(a); }

inline Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int pow(const Int& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow(const Rat& base, unsigned long e)
{
    Rat r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

// Exact division; throws if b does not divide a.
inline Int div_exact(const Int& a, const Int& b)
{
    if (sign(b) == 0) throw std::domain_error("div_exact: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sign(r) != 0) throw std::domain_error("div_exact: inexact division");
    return q;
}

// Floor of sqrt plus one adjustment so that result*result >= a (ceiling sqrt).
inline Int isqrt_ceil(const Int& a)
{
    if (sign(a) < 0) throw std::domain_error("isqrt_ceil: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    if (r * r < a) ++r;
    return r;
}

inline Rat numerator(const Rat& a) { return Rat(a.get_num()); }
inline Rat denominator(const Rat& a) { return Rat(a.get_den()); }

inline std::string to_string(const Int& a) { return a.get_str(); }

// Canonical "p/q" (or "p" when q = 1).
inline std::string to_string(const Rat& a)
{
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

} // namespace biorder

#endif
