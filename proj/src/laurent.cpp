#include "jetzeta/laurent.hpp"

#include <cmath>

namespace jetzeta {

long LPoly::min_exp() const
{
    if (c_.empty())
        throw DomainError("min_exp of zero polynomial");
    return c_.begin()->first;
}

long LPoly::max_exp() const
{
    if (c_.empty())
        throw DomainError("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

LPoly& LPoly::operator+=(const LPoly& o)
{
    for (const auto& [e, v] : o.c_) {
        c_[e] += v;
        prune(e);
    }
    return *this;
}

LPoly& LPoly::operator-=(const LPoly& o)
{
    for (const auto& [e, v] : o.c_) {
        c_[e] -= v;
        prune(e);
    }
    return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b)
{
    LPoly r;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) {
            r.c_[ea + eb] += va * vb;
            r.prune(ea + eb);
        }
    return r;
}

LPoly LPoly::operator-() const
{
    LPoly r;
    for (const auto& [e, v] : c_)
        r.c_[e] = -v;
    return r;
}

Rat rat_pow(const Rat& q, long e)
{
    if (q == 0)
        throw DomainError("rat_pow: base 0");
    Rat base = e >= 0 ? q : Rat(q.get_den(), q.get_num());
    if (e < 0)
        base.canonicalize();
    unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e);
    Rat r(1);
    Rat p = base;
    while (k) {
        if (k & 1)
            r *= p;
        p *= p;
        k >>= 1;
    }
    return r;
}

Rat LPoly::eval_rat(const Rat& q) const
{
    Rat r(0);
    for (const auto& [e, v] : c_)
        r += Rat(v) * rat_pow(q, e);
    return r;
}

long double LPoly::eval_ld(long double Lval) const
{
    long double r = 0;
    for (const auto& [e, v] : c_)
        r += static_cast<long double>(v.get_d()) * powl(Lval, static_cast<long double>(e));
    return r;
}

Int LPoly::eval_one() const
{
    Int r = 0;
    for (const auto& [e, v] : c_)
        r += v;
    return r;
}

LPoly LPoly::div_exact_L_minus_1() const
{
    // (L-1)*Q = P gives q_{e-1} = p_e + q_e from the top exponent down;
    // divisibility is exactly P(1) = 0
    if (is_zero())
        return LPoly();
    if (eval_one() != 0)
        throw DomainError("div_exact_L_minus_1: not divisible");
    LPoly quot;
    Int q = 0;
    const long hi = max_exp();
    const long lo = min_exp();
    for (long e = hi; e >= lo + 1; --e) {
        q += coeff(e);
        if (q != 0)
            quot.c_[e - 1] = q;
    }
    return quot;
}

std::string LPoly::str() const
{
    if (c_.empty())
        return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, v] = *it;
        if (!s.empty())
            s += v >= 0 ? " + " : " - ";
        else if (v < 0)
            s += "-";
        Int a = abs(v);
        if (a != 1 || e == 0)
            s += a.get_str();
        if (e != 0) {
            if (a != 1)
                s += "*";
            s += "L";
            if (e != 1)
                s += "^" + std::to_string(e);
        }
    }
    return s;
}

} // namespace jetzeta
