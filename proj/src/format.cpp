#include "jetzeta/format.hpp"

#include <sstream>

#include "jetzeta/errors.hpp"

namespace jetzeta {

Json int_json(const Int& v)
{
    if (v.fits_slong_p())
        return Json(v.get_si());
    return Json(v.get_str());
}

Int int_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return Int(j.get<std::string>());
    throw DomainError("expected an integer or a decimal string");
}

std::vector<Int> generators_from_json(const Json& j)
{
    if (!j.contains("generators") || !j["generators"].is_array())
        throw DomainError("input document needs a \"generators\" array");
    std::vector<Int> gens;
    for (const auto& v : j["generators"])
        gens.push_back(int_from_json(v));
    return gens;
}

std::vector<Int> parse_generators_csv(const std::string& csv)
{
    std::vector<Int> gens;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw DomainError("empty entry in generator list");
        gens.push_back(Int(item));
    }
    if (gens.empty())
        throw DomainError("empty generator list");
    return gens;
}

Json semigroup_json(const SemigroupData& S)
{
    Json j;
    j["gens"] = Json::array();
    for (const auto& v : S.gens)
        j["gens"].push_back(int_json(v));
    j["e"] = Json::array();
    for (const auto& v : S.e)
        j["e"].push_back(int_json(v));
    j["n"] = Json::array();
    for (int i = 1; i <= S.g; ++i)
        j["n"].push_back(int_json(S.n[i]));
    j["n0"] = int_json(S.n[0]);
    j["b"] = Json::array();
    for (int i = 1; i <= S.g; ++i) {
        Json row = Json::array();
        for (const auto& v : S.b[i])
            row.push_back(int_json(v));
        j["b"].push_back(row);
    }
    return j;
}

Json pole_json(const PoleCandidate& c)
{
    Json j;
    j["value"] = rat_str(c.value);
    j["residue"] = rat_str(c.residue);
    j["order"] = c.order;
    // unreduced pair behind the value: (g, 1) for the gauge pole
    j["nu"] = int_json(c.nu);
    j["N"] = int_json(c.N);
    return j;
}

Json invariants_json(const SemigroupData& S)
{
    Json j;
    j["semigroup"] = semigroup_json(S);
    j["pairs"] = Json::array();
    for (const auto& p : structural_pairs(S)) {
        Json e;
        e["i"] = p.i;
        e["N"] = int_json(p.N);
        e["nu"] = int_json(p.nu);
        j["pairs"].push_back(e);
    }
    j["lct"] = rat_str(lct(S));
    j["poles"] = Json::array();
    for (const auto& c : residues(S))
        j["poles"].push_back(pole_json(c));
    return j;
}

Json motrat_json(const MotRat& x)
{
    Json j;
    j["numerator"] = Json::array();
    for (long d = 0; d <= x.num().degree(); ++d) {
        const LPoly& c = x.num().coeff(d);
        if (c.is_zero())
            continue;
        Json entry;
        entry["tdeg"] = d;
        entry["terms"] = Json::array();
        for (const auto& [e, v] : c.terms()) {
            Json t;
            t["ldeg"] = e;
            t["coef"] = int_json(v);
            entry["terms"].push_back(t);
        }
        j["numerator"].push_back(entry);
    }
    j["denominator"] = Json::array();
    for (const auto& f : x.den()) {
        Json t;
        t["a"] = f.a;
        t["b"] = f.b;
        j["denominator"].push_back(t);
    }
    return j;
}

MotRat motrat_from_json(const Json& j)
{
    TPoly num;
    for (const auto& entry : j.at("numerator")) {
        LPoly c;
        for (const auto& t : entry.at("terms"))
            c += LPoly::monomial(int_from_json(t.at("coef")), t.at("ldeg").get<long>());
        num.add_to_coeff(entry.at("tdeg").get<long>(), c);
    }
    std::vector<DenomFactor> den;
    for (const auto& t : j.at("denominator"))
        den.push_back(DenomFactor{t.at("a").get<long>(), t.at("b").get<long>()});
    return MotRat(std::move(num), std::move(den));
}

Json zeta_top_json(const RatQs& z)
{
    Json j;
    j["num"] = Json::array();
    for (const auto& c : z.num)
        j["num"].push_back(rat_str(c));
    j["den"] = Json::array();
    for (const auto& [a, b] : z.den)
        j["den"].push_back(Json::array({int_json(a), int_json(b)}));
    return j;
}

Json components_json(const std::vector<ComponentDescriptor>& comps)
{
    Json j = Json::array();
    for (const auto& c : comps) {
        Json e;
        if (c.kind == ComponentDescriptor::Kind::Main) {
            e["kind"] = "B";
        } else {
            e["kind"] = "C";
            e["k"] = int_json(c.k);
        }
        e["codim"] = int_json(c.codim);
        j.push_back(e);
    }
    return j;
}

Json flatness_json(const FlatnessReport& rep)
{
    Json j;
    j["g"] = rep.g;
    switch (rep.verdict) {
    case FlatnessReport::Verdict::NotFlatForAllM:
        j["verdict"] = "not_flat_for_all_m";
        break;
    case FlatnessReport::Verdict::NotFlatFrom:
        j["verdict"] = "not_flat_from";
        j["m0"] = int_json(rep.m0);
        break;
    case FlatnessReport::Verdict::HypersurfaceFlat:
        j["verdict"] = "hypersurface_flat";
        break;
    }
    return j;
}

std::string lpoly_latex(const LPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, v] = *it;
        if (!s.empty())
            s += v >= 0 ? "+" : "-";
        else if (v < 0)
            s += "-";
        Int a = abs(v);
        if (a != 1 || e == 0)
            s += a.get_str();
        if (e != 0) {
            s += "\\mathbb{L}";
            if (e != 1)
                s += "^{" + std::to_string(e) + "}";
        }
    }
    return s;
}

namespace {

std::string tpoly_latex(const TPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (long d = p.degree(); d >= 0; --d) {
        const LPoly c = p.coeff(d);
        if (c.is_zero())
            continue;
        if (!s.empty())
            s += "+";
        const bool wrap = c.terms().size() > 1;
        s += wrap ? "\\left(" + lpoly_latex(c) + "\\right)" : lpoly_latex(c);
        if (d >= 1) {
            s += "T";
            if (d > 1)
                s += "^{" + std::to_string(d) + "}";
        }
    }
    return s;
}

std::string factor_latex(const DenomFactor& f)
{
    std::string s = "(1-\\mathbb{L}^{-" + std::to_string(f.a) + "}T";
    if (f.b != 1)
        s += "^{" + std::to_string(f.b) + "}";
    return s + ")";
}

std::string qp_latex(const QPoly& p)
{
    if (p.empty())
        return "0";
    std::string s;
    for (long d = qp_degree(p); d >= 0; --d) {
        const Rat& c = p[static_cast<std::size_t>(d)];
        if (c == 0)
            continue;
        if (!s.empty())
            s += c > 0 ? "+" : "-";
        else if (c < 0)
            s += "-";
        Rat a = abs(c);
        if (a != 1 || d == 0)
            s += a.get_str();
        if (d >= 1) {
            s += "s";
            if (d > 1)
                s += "^{" + std::to_string(d) + "}";
        }
    }
    return s;
}

} // namespace

std::string motivic_latex(const MotRat& x)
{
    ClearedForm cf = cleared_presentation(x);
    std::string den;
    if (cf.shift > 0)
        den += "\\mathbb{L}^{" + std::to_string(cf.shift) + "}";
    for (const auto& f : cf.den)
        den += factor_latex(f);
    if (den.empty())
        return tpoly_latex(cf.num);
    return "\\frac{" + tpoly_latex(cf.num) + "}{" + den + "}";
}

std::string zeta_top_latex(const RatQs& z)
{
    std::string den;
    for (const auto& [a, b] : z.den) {
        std::string lin = a.get_str();
        if (b == 1)
            lin += "+s";
        else
            lin += "+" + b.get_str() + "s";
        den += "(" + lin + ")";
    }
    return "\\frac{" + qp_latex(z.num) + "}{" + den + "}";
}

std::string motivic_text(const MotRat& x)
{
    ClearedForm cf = cleared_presentation(x);
    std::string den;
    if (cf.shift > 0)
        den += "L^" + std::to_string(cf.shift);
    for (const auto& f : cf.den) {
        if (!den.empty())
            den += " ";
        den += "(1 - L^-" + std::to_string(f.a) + " T";
        if (f.b != 1)
            den += "^" + std::to_string(f.b);
        den += ")";
    }
    if (den.empty())
        return cf.num.str();
    return "[" + cf.num.str() + "] / [" + den + "]";
}

std::string zeta_top_text(const RatQs& z)
{
    std::string den;
    for (const auto& [a, b] : z.den)
        den += "(" + a.get_str() + " + " + b.get_str() + "s)";
    return "[" + qp_str(z.num, "s") + "] / [" + den + "]";
}

} // namespace jetzeta
