#include "jetzeta/topo.hpp"

#include <cmath>

#include "jetzeta/errors.hpp"

namespace jetzeta {

namespace {

QPoly linear(const Int& a, const Int& b) // a + s*b
{
    return QPoly{Rat(a), Rat(b)};
}

/* Evaluates the zeta function through its branch terms. The combined
 * numerator nearly cancels at L close to 1 (its value is O(eps^{g+1}) while
 * the summands are O(1)), so evaluating the single fraction loses every
 * significant digit; the individual branch terms are cancellation-free. */
long double eval_zeta_terms(const SemigroupData& S, const ZetaAssembly& Z, bool local,
                            long double Lval, long double Tval)
{
    long double sum = 0;
    if (!local)
        sum += Z.termA.eval_numeric(Lval, Tval);
    sum += Z.termB.eval_numeric(Lval, Tval);
    for (const auto& c : Z.termsC)
        sum += c.eval_numeric(Lval, Tval);
    sum += Z.termD.eval_numeric(Lval, Tval);
    long double head = local ? powl(Lval, -static_cast<long double>(S.g + 1)) : 1.0L;
    return head - (1.0L - Tval) * sum;
}

} // namespace

RatQs zeta_top(const SemigroupData& S)
{
    auto pairs = structural_pairs(S);
    auto nu = [&](int i) { return pairs[static_cast<std::size_t>(i - 1)].nu; };
    auto N = [&](int i) { return pairs[static_cast<std::size_t>(i - 1)].N; };
    const int g = S.g;

    RatQs z;
    z.den.emplace_back(Int(g), Int(1));
    for (int i = 1; i <= g; ++i)
        z.den.emplace_back(nu(i), N(i));

    // product of all factors except the listed candidate indices (0 = gauge)
    auto partial_product = [&](std::initializer_list<int> skip) {
        QPoly p{Rat(1)};
        int idx = 0;
        for (const auto& [a, b] : z.den) {
            bool skipped = false;
            for (int s : skip)
                if (s == idx)
                    skipped = true;
            if (!skipped)
                p = qp_mul(p, linear(a, b));
            ++idx;
        }
        return p;
    };
    const QPoly s_poly{Rat(0), Rat(1)};

    QPoly num = qp_scale(partial_product({1}), Rat(nu(1)));
    for (int i = 1; i <= g - 1; ++i) {
        Rat E = make_rat(S.e[i + 1] * N(i) * N(i + 1), S.n[i] * S.gens[i] * S.gens[i + 1]) *
                Rat(S.n[i + 1] * S.gens[i + 1] - S.n[i] * S.gens[i]);
        QPoly term = qp_scale(qp_mul(s_poly, partial_product({i, i + 1})), E);
        num = qp_sub(num, term);
    }
    num = qp_sub(num, qp_mul(s_poly, partial_product({0, g})));

    z.num = std::move(num);
    return z;
}

Rat zeta_top_eval(const RatQs& z, const Rat& s)
{
    Rat den(1);
    for (const auto& [a, b] : z.den) {
        Rat f = Rat(a) + s * Rat(b);
        if (f == 0)
            throw PoleHit("zeta_top_eval at a pole");
        den *= f;
    }
    return qp_eval(z.num, s) / den;
}

std::vector<PoleCandidate> poles_with_residues(const SemigroupData& S)
{
    RatQs z = zeta_top(S);
    auto cands = residues(S);
    for (auto& c : cands) {
        // z.den[0] is the gauge factor, z.den[i] the one for structural i
        const std::size_t idx =
            c.source == PoleCandidate::Source::Gauge ? 0 : static_cast<std::size_t>(c.index);
        const Rat x0 = c.value;
        // derivative of the denominator at the root of its factor
        Rat dden = Rat(z.den[idx].second);
        for (std::size_t j = 0; j < z.den.size(); ++j) {
            if (j == idx)
                continue;
            Rat f = Rat(z.den[j].first) + x0 * Rat(z.den[j].second);
            if (f == 0)
                throw ResidueMismatch("two denominator factors share a root");
            dden *= f;
        }
        Rat numval = qp_eval(z.num, x0);
        if (numval == 0)
            throw ResidueMismatch("numerator vanishes at candidate " + rat_str(x0));
        Rat symbolic = numval / dden;
        if (symbolic != c.residue)
            throw ResidueMismatch("residue at " + rat_str(x0) + ": table " + rat_str(c.residue) +
                                  " vs symbolic " + rat_str(symbolic));
        c.order = 1;
    }
    return cands;
}

long double check_specialization(const SemigroupData& S, double eps,
                                 const std::vector<Rat>& s_samples)
{
    if (!(eps > 0) || eps > 1e-3)
        throw DomainError("check_specialization: eps in (0, 1e-3] required");
    const ZetaAssembly Z = zeta_motivic(S);
    const RatQs ztop = zeta_top(S);

    const long double Lval = 1.0L + static_cast<long double>(eps);
    long double worst = 0;
    for (const Rat& s : s_samples) {
        long double Tval = powl(Lval, -to_ld(s));
        long double approx = eval_zeta_terms(S, Z, false, Lval, Tval);
        long double exact = to_ld(zeta_top_eval(ztop, s));
        worst = std::max(worst, fabsl(approx - exact));
    }
    return worst;
}

bool global_equals_local_top(const SemigroupData& S)
{
    ZetaAssembly Z = zeta_motivic(S);

    TPoly one_minus_T(LPoly(1));
    one_minus_T.add_to_coeff(1, LPoly(-1));

    // global - local = (1 - L^{-(g+1)}) - (1-T)*termA
    LPoly drop = LPoly(1) - LPoly::L(-(S.g + 1));
    MotRat expected = MotRat(TPoly(drop)) - Z.termA.mul_poly(one_minus_T);
    if (!(Z.total_global - Z.total_local).equals(expected))
        return false;

    // both parts of the difference vanish at L = 1
    if (drop.eval_one() != 0)
        return false;
    const TPoly& anum = Z.termA.num();
    for (long d = 0; d <= anum.degree(); ++d)
        if (anum.coeff(d).eval_one() != 0)
            return false;

    // numeric corroboration: the local zeta specializes onto zeta_top too
    const double eps = 1e-6;
    const RatQs ztop = zeta_top(S);
    const long double Lval = 1.0L + static_cast<long double>(eps);
    for (const Rat& s : {Rat(0), Rat(1, 2), Rat(1)}) {
        long double Tval = powl(Lval, -to_ld(s));
        long double dev =
            fabsl(eval_zeta_terms(S, Z, true, Lval, Tval) - to_ld(zeta_top_eval(ztop, s)));
        if (dev > 100.0L * static_cast<long double>(eps))
            return false;
    }
    return true;
}

} // namespace jetzeta
