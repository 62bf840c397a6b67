#pragma once

#include <map>
#include <ostream>
#include <string>

#include "jetzeta/numeric.hpp"

namespace jetzeta {

/* Sparse Laurent polynomial in the class L of the affine line, with
 * integer coefficients. Zero coefficients are never stored. */
class LPoly {
public:
    LPoly() = default;
    LPoly(long v) { insert(0, Int(v)); }
    explicit LPoly(const Int& v) { insert(0, v); }

    static LPoly monomial(const Int& coef, long exp)
    {
        LPoly p;
        p.insert(exp, coef);
        return p;
    }
    /* L^exp */
    static LPoly L(long exp = 1) { return monomial(Int(1), exp); }

    bool is_zero() const { return c_.empty(); }
    const std::map<long, Int>& terms() const { return c_; }
    Int coeff(long exp) const
    {
        auto it = c_.find(exp);
        return it == c_.end() ? Int(0) : it->second;
    }
    long min_exp() const; // requires nonzero
    long max_exp() const;

    LPoly& operator+=(const LPoly& o);
    LPoly& operator-=(const LPoly& o);
    friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
    friend LPoly operator*(const LPoly& a, const LPoly& b);
    LPoly& operator*=(const LPoly& o) { return *this = *this * o; }
    LPoly operator-() const;

    friend bool operator==(const LPoly& a, const LPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }

    /* exact substitution L = q, q != 0 */
    Rat eval_rat(const Rat& q) const;
    long double eval_ld(long double Lval) const;
    /* value at L = 1 (sum of coefficients) */
    Int eval_one() const;

    /* exact division by (L - 1); throws DomainError when not divisible */
    LPoly div_exact_L_minus_1() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const LPoly& p) { return os << p.str(); }

private:
    void insert(long exp, const Int& coef)
    {
        if (coef != 0)
            c_[exp] += coef, prune(exp);
    }
    void prune(long exp)
    {
        auto it = c_.find(exp);
        if (it != c_.end() && it->second == 0)
            c_.erase(it);
    }

    std::map<long, Int> c_;
};

/* q^e for exact rational q != 0, e possibly negative */
Rat rat_pow(const Rat& q, long e);

} // namespace jetzeta
