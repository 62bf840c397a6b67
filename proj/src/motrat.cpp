#include "jetzeta/motrat.hpp"

#include <algorithm>
#include <cmath>

namespace jetzeta {

MotRat::MotRat(TPoly num, std::vector<DenomFactor> den) : num_(std::move(num)), den_(std::move(den))
{
    for (const auto& f : den_)
        if (f.b < 1 || f.a < 0)
            throw DomainError("MotRat: factor needs a >= 0, b >= 1");
    std::sort(den_.begin(), den_.end());
}

namespace {

/* multiset difference a \ b for sorted factor lists */
std::vector<DenomFactor> factor_diff(const std::vector<DenomFactor>& a,
                                     const std::vector<DenomFactor>& b)
{
    std::vector<DenomFactor> r;
    std::size_t i = 0, j = 0;
    while (i < a.size()) {
        if (j < b.size() && a[i] == b[j]) {
            ++i;
            ++j;
        } else if (j < b.size() && b[j] < a[i]) {
            ++j;
        } else {
            r.push_back(a[i]);
            ++i;
        }
    }
    return r;
}

/* least common multiset (max of multiplicities) */
std::vector<DenomFactor> factor_lcm(const std::vector<DenomFactor>& a,
                                    const std::vector<DenomFactor>& b)
{
    std::vector<DenomFactor> r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j]))
            r.push_back(a[i++]);
        else if (i == a.size() || b[j] < a[i])
            r.push_back(b[j++]);
        else {
            r.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return r;
}

TPoly factor_poly(const DenomFactor& f)
{
    TPoly p(LPoly(1));
    p.add_to_coeff(f.b, -LPoly::L(-f.a));
    return p;
}

TPoly product_poly(const std::vector<DenomFactor>& fs)
{
    TPoly p(LPoly(1));
    for (const auto& f : fs)
        p = p * factor_poly(f);
    return p;
}

} // namespace

MotRat add(const MotRat& x, const MotRat& y)
{
    std::vector<DenomFactor> den = factor_lcm(x.den_, y.den_);
    TPoly num = x.num_ * product_poly(factor_diff(den, x.den_)) +
                y.num_ * product_poly(factor_diff(den, y.den_));
    if (num.is_zero())
        return MotRat();
    return MotRat(std::move(num), std::move(den));
}

MotRat mul(const MotRat& x, const MotRat& y)
{
    if (x.is_zero() || y.is_zero())
        return MotRat();
    std::vector<DenomFactor> den = x.den_;
    den.insert(den.end(), y.den_.begin(), y.den_.end());
    return MotRat(x.num_ * y.num_, std::move(den));
}

MotRat operator-(const MotRat& x, const MotRat& y)
{
    return add(x, y.scaled(LPoly(-1)));
}

TPoly MotRat::expand_series(long M) const
{
    TPoly r = num_.truncated(M);
    for (const auto& f : den_) {
        if (f.b < 1)
            throw NonUnitDenominator("factor with b < 1 has no power-series inverse");
        // 1/(1 - L^{-a} T^b) = sum_j L^{-aj} T^{bj}
        TPoly geo;
        for (long j = 0; j * f.b <= M; ++j)
            geo.add_to_coeff(j * f.b, LPoly::L(-f.a * j));
        r = mul_truncated(r, geo, M);
    }
    return r;
}

TPoly MotRat::denominator_poly() const
{
    return product_poly(den_);
}

MotRat::QRatT MotRat::eval_L(const Rat& q) const
{
    if (q == 0)
        throw DomainError("eval_L: q must be nonzero");
    QRatT r;
    r.num.resize(static_cast<std::size_t>(num_.degree() + 1), Rat(0));
    for (long d = 0; d <= num_.degree(); ++d)
        r.num[static_cast<std::size_t>(d)] = num_.coeff(d).eval_rat(q);
    qp_trim(r.num);
    r.den = QPoly{Rat(1)};
    for (const auto& f : den_) {
        QPoly fac(static_cast<std::size_t>(f.b) + 1, Rat(0));
        fac[0] = 1;
        fac[static_cast<std::size_t>(f.b)] = -rat_pow(q, -f.a);
        r.den = qp_mul(r.den, fac);
    }
    return r;
}

long double MotRat::eval_numeric(long double Lval, long double Tval) const
{
    long double num = 0;
    for (long d = num_.degree(); d >= 0; --d)
        num = num * Tval + num_.coeff(d).eval_ld(Lval);
    long double den = 1;
    for (const auto& f : den_) {
        long double fac =
            1.0L - powl(Lval, static_cast<long double>(-f.a)) * powl(Tval, static_cast<long double>(f.b));
        if (fac == 0.0L)
            throw PoleHit("denominator factor vanishes at the evaluation point");
        den *= fac;
    }
    return num / den;
}

bool MotRat::equals(const MotRat& o) const
{
    // cancel shared factors first, then cross-multiply
    std::vector<DenomFactor> mine = factor_diff(den_, o.den_);
    std::vector<DenomFactor> theirs = factor_diff(o.den_, den_);
    return num_ * product_poly(theirs) == o.num_ * product_poly(mine);
}

} // namespace jetzeta
