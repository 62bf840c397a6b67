#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "jetzeta/laurent.hpp"

namespace jetzeta {

/* Polynomial in T with LPoly coefficients, dense by T-degree, trailing
 * zeros trimmed. The zero polynomial has degree -1. */
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(LPoly c0)
    {
        c_.push_back(std::move(c0));
        trim();
    }
    TPoly(long v) : TPoly(LPoly(v)) {}

    static TPoly monomial(LPoly c, long tdeg);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    LPoly coeff(long d) const
    {
        return d >= 0 && d <= degree() ? c_[static_cast<std::size_t>(d)] : LPoly();
    }
    void add_to_coeff(long d, const LPoly& v);

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly operator-() const;

    TPoly scaled(const LPoly& c) const;
    /* multiply by T^k (k >= 0) */
    TPoly shifted(long k) const;
    /* exact division by T; requires zero constant coefficient */
    TPoly div_T() const;
    /* drop all degrees > M */
    TPoly truncated(long M) const;

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.str(); }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<LPoly> c_;
};

/* product with all degrees > M dropped along the way */
TPoly mul_truncated(const TPoly& a, const TPoly& b, long M);

} // namespace jetzeta
