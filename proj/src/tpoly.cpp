#include "jetzeta/tpoly.hpp"

namespace jetzeta {

TPoly TPoly::monomial(LPoly c, long tdeg)
{
    TPoly p;
    if (tdeg < 0)
        throw DomainError("TPoly::monomial: negative degree");
    if (!c.is_zero()) {
        p.c_.resize(static_cast<std::size_t>(tdeg) + 1);
        p.c_[static_cast<std::size_t>(tdeg)] = std::move(c);
    }
    return p;
}

void TPoly::add_to_coeff(long d, const LPoly& v)
{
    if (d < 0)
        throw DomainError("TPoly::add_to_coeff: negative degree");
    if (v.is_zero())
        return;
    if (d > degree())
        c_.resize(static_cast<std::size_t>(d) + 1);
    c_[static_cast<std::size_t>(d)] += v;
    trim();
}

TPoly& TPoly::operator+=(const TPoly& o)
{
    if (o.degree() > degree())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o)
{
    if (o.degree() > degree())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return TPoly();
    TPoly r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

TPoly TPoly::operator-() const
{
    TPoly r;
    r.c_.reserve(c_.size());
    for (const auto& v : c_)
        r.c_.push_back(-v);
    return r;
}

TPoly TPoly::scaled(const LPoly& c) const
{
    TPoly r;
    if (c.is_zero())
        return r;
    r.c_.reserve(c_.size());
    for (const auto& v : c_)
        r.c_.push_back(v * c);
    r.trim();
    return r;
}

TPoly TPoly::shifted(long k) const
{
    if (k < 0)
        throw DomainError("TPoly::shifted: negative shift");
    if (is_zero())
        return TPoly();
    TPoly r;
    r.c_.resize(c_.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i + static_cast<std::size_t>(k)] = c_[i];
    return r;
}

TPoly TPoly::div_T() const
{
    if (is_zero())
        return TPoly();
    if (!c_[0].is_zero())
        throw DomainError("TPoly::div_T: nonzero constant coefficient");
    TPoly r;
    r.c_.assign(c_.begin() + 1, c_.end());
    return r;
}

TPoly TPoly::truncated(long M) const
{
    TPoly r;
    if (M < 0)
        return r;
    std::size_t keep = std::min(c_.size(), static_cast<std::size_t>(M) + 1);
    r.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(keep));
    r.trim();
    return r;
}

TPoly mul_truncated(const TPoly& a, const TPoly& b, long M)
{
    TPoly r;
    for (long i = 0; i <= a.degree() && i <= M; ++i) {
        LPoly ai = a.coeff(i);
        if (ai.is_zero())
            continue;
        for (long j = 0; j <= b.degree() && i + j <= M; ++j)
            r.add_to_coeff(i + j, ai * b.coeff(j));
    }
    return r;
}

std::string TPoly::str() const
{
    if (is_zero())
        return "0";
    std::string s;
    for (long d = 0; d <= degree(); ++d) {
        if (coeff(d).is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        s += "(" + coeff(d).str() + ")";
        if (d >= 1) {
            s += "*T";
            if (d > 1)
                s += "^" + std::to_string(d);
        }
    }
    return s;
}

} // namespace jetzeta
