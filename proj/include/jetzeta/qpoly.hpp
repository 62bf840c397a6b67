#pragma once

#include <string>
#include <vector>

#include "jetzeta/numeric.hpp"

namespace jetzeta {

/* Dense polynomial over Q, coefficient of degree d at index d. */
using QPoly = std::vector<Rat>;

inline void qp_trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline long qp_degree(const QPoly& p)
{
    return static_cast<long>(p.size()) - 1;
}

inline QPoly qp_add(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    qp_trim(r);
    return r;
}

inline QPoly qp_sub(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    qp_trim(r);
    return r;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

inline QPoly qp_scale(const QPoly& a, const Rat& c)
{
    QPoly r = a;
    for (auto& v : r)
        v *= c;
    qp_trim(r);
    return r;
}

inline Rat qp_eval(const QPoly& p, const Rat& x)
{
    Rat r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = r * x + *it;
    return r;
}

inline long double qp_eval_ld(const QPoly& p, long double x)
{
    long double r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = r * x + to_ld(*it);
    return r;
}

inline std::string qp_str(const QPoly& p, const std::string& var)
{
    if (p.empty())
        return "0";
    std::string s;
    for (long d = qp_degree(p); d >= 0; --d) {
        const Rat& c = p[static_cast<std::size_t>(d)];
        if (c == 0)
            continue;
        if (!s.empty())
            s += c > 0 ? " + " : " - ";
        else if (c < 0)
            s += "-";
        Rat a = abs(c);
        if (a != 1 || d == 0)
            s += a.get_str();
        if (d >= 1) {
            if (a != 1)
                s += "*";
            s += var;
            if (d > 1)
                s += "^" + std::to_string(d);
        }
    }
    return s;
}

} // namespace jetzeta
