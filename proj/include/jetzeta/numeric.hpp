#pragma once

#include <gmpxx.h>

#include <string>

#include "jetzeta/errors.hpp"

namespace jetzeta {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/* floor(a/b), b > 0 */
inline Int fdiv(const Int& a, const Int& b)
{
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/* ceil(a/b), b > 0 */
inline Int cdiv(const Int& a, const Int& b)
{
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a)
{
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Rat make_rat(const Int& num, const Int& den)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/* Exact narrowing; series degrees and Laurent exponents are machine ints. */
inline long to_long(const Int& v)
{
    if (!v.fits_slong_p())
        throw DomainError("integer does not fit in a machine word: " + v.get_str());
    return v.get_si();
}

inline std::string rat_str(const Rat& r)
{
    return r.get_str();
}

inline long double to_ld(const Rat& r)
{
    return static_cast<long double>(mpq_get_d(r.get_mpq_t()));
}

} // namespace jetzeta
