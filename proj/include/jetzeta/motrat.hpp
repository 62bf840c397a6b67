#pragma once

#include <tuple>
#include <vector>

#include "jetzeta/qpoly.hpp"
#include "jetzeta/tpoly.hpp"

namespace jetzeta {

/* One denominator factor (1 - L^{-a} T^{b}), a >= 0, b >= 1. */
struct DenomFactor {
    long a = 0;
    long b = 1;

    friend bool operator==(const DenomFactor& x, const DenomFactor& y)
    {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const DenomFactor& x, const DenomFactor& y)
    {
        return std::tie(x.b, x.a) < std::tie(y.b, y.a);
    }
};

/* Rational function numerator / prod(1 - L^{-a_i} T^{b_i}) with the factor
 * multiset kept unexpanded and sorted by (b, a). Equality of values is
 * decided by cross-multiplication, not by comparing factor multisets. */
class MotRat {
public:
    MotRat() = default;
    explicit MotRat(TPoly num, std::vector<DenomFactor> den = {});
    explicit MotRat(const LPoly& c) : MotRat(TPoly(c)) {}

    const TPoly& num() const { return num_; }
    const std::vector<DenomFactor>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /* sum over the least common multiset of denominator factors */
    friend MotRat add(const MotRat& x, const MotRat& y);
    friend MotRat mul(const MotRat& x, const MotRat& y);
    friend MotRat operator+(const MotRat& x, const MotRat& y) { return add(x, y); }
    friend MotRat operator-(const MotRat& x, const MotRat& y);
    friend MotRat operator*(const MotRat& x, const MotRat& y) { return mul(x, y); }

    MotRat scaled(const LPoly& c) const { return MotRat(num_.scaled(c), den_); }
    MotRat mul_poly(const TPoly& p) const { return MotRat(num_ * p, den_); }
    /* exact division of the numerator by T */
    MotRat div_T() const { return MotRat(num_.div_T(), den_); }

    /* formal power-series expansion through T^M; throws NonUnitDenominator
     * when some factor has b < 1 */
    TPoly expand_series(long M) const;

    /* the denominator multiset expanded into a TPoly */
    TPoly denominator_poly() const;

    /* exact substitution L = q (q != 0): numerator and expanded denominator
     * as polynomials in T over Q */
    struct QRatT {
        QPoly num;
        QPoly den;
    };
    QRatT eval_L(const Rat& q) const;

    /* floating evaluation; throws PoleHit when a denominator factor is
     * exactly zero at (Lval, Tval) */
    long double eval_numeric(long double Lval, long double Tval) const;

    /* value equality by cross-multiplied polynomial identity */
    bool equals(const MotRat& o) const;

private:
    TPoly num_;
    std::vector<DenomFactor> den_; // sorted
};

} // namespace jetzeta
