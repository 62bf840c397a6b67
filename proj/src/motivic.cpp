#include "jetzeta/motivic.hpp"

#include "jetzeta/errors.hpp"

namespace jetzeta {

namespace {

DenomFactor gauge_factor(const SemigroupData& S)
{
    return DenomFactor{S.g, 1};
}

DenomFactor structural_factor(const StructuralPair& p)
{
    return DenomFactor{to_long(p.nu), to_long(p.N)};
}

} // namespace

MotRat term_side_zero(const SemigroupData& S)
{
    LPoly c = (LPoly::L(1) - LPoly(1)) * LPoly::L(-(S.g + 1));
    return MotRat(TPoly::monomial(c, 1), {gauge_factor(S)});
}

MotRat term_main(const SemigroupData& S)
{
    auto pairs = structural_pairs(S);
    const long N1 = to_long(pairs[0].N);
    TPoly inner;
    for (long r = 0; r < N1; ++r) {
        Int exp = 0;
        for (int i = 0; i <= S.g; ++i)
            exp += fdiv(Int(r), S.n[i]);
        inner.add_to_coeff(r, LPoly::L(-to_long(exp)));
    }
    TPoly num = inner.scaled(LPoly::L(-(S.g + 1))).shifted(1);
    return MotRat(std::move(num), {structural_factor(pairs[0])});
}

TPoly z_i_polynomial(const SemigroupData& S, int i)
{
    if (i < 1 || i > S.g - 1)
        throw DomainError("z_i_polynomial: i must lie in 1..g-1");
    auto pairs = structural_pairs(S);

    Int block = 1; // n_2 * ... * n_i
    for (int l = 2; l <= i; ++l)
        block *= S.n[l];
    const Int Ki = K_index(S, i);
    const Int rmax = (S.e[i + 1] * pairs[static_cast<std::size_t>(i)].N) / S.gens[i + 1];

    TPoly z;
    for (Int r = 0; r < Ki; ++r)
        for (Int rp = 1; rp <= rmax; ++rp) {
            Int k = (rp + r) * block;
            MInterval I = interval(S, i, k, rp);
            for (Int m = I.lo; m < I.hi; ++m)
                z.add_to_coeff(to_long(m), LPoly::L(-to_long(c_ik(S, i, k, m) + 1)));
        }
    return z;
}

MotRat term_infinite(const SemigroupData& S)
{
    auto pairs = structural_pairs(S);
    const auto& pg = pairs[static_cast<std::size_t>(S.g - 1)];
    LPoly c = (LPoly::L(1) - LPoly(1)) * LPoly::L(-to_long(pg.nu + S.g + 1));
    TPoly num = TPoly::monomial(c, to_long(pg.N) + 1);
    return MotRat(std::move(num), {gauge_factor(S), structural_factor(pg)});
}

ZetaAssembly zeta_motivic(const SemigroupData& S)
{
    auto pairs = structural_pairs(S);
    ZetaAssembly Z;
    Z.termA = term_side_zero(S).div_T();
    Z.termB = term_main(S).div_T();
    for (int i = 1; i <= S.g - 1; ++i) {
        TPoly num = z_i_polynomial(S, i).scaled(LPoly::L(1) - LPoly(1));
        Z.termsC.push_back(MotRat(std::move(num),
                                  {structural_factor(pairs[static_cast<std::size_t>(i - 1)]),
                                   structural_factor(pairs[static_cast<std::size_t>(i)])}));
    }
    Z.termD = term_infinite(S).div_T();

    MotRat branch_sum = Z.termB;
    for (const auto& c : Z.termsC)
        branch_sum = branch_sum + c;
    branch_sum = branch_sum + Z.termD;

    TPoly one_minus_T(LPoly(1));
    one_minus_T.add_to_coeff(1, LPoly(-1));

    MotRat full = Z.termA + branch_sum;
    Z.total_global = MotRat(TPoly(LPoly(1))) - full.mul_poly(one_minus_T);
    Z.total_local = MotRat(TPoly(LPoly::L(-(S.g + 1)))) - branch_sum.mul_poly(one_minus_T);
    return Z;
}

bool series_consistency(const SemigroupData& S, long M)
{
    if (M < 2)
        throw DomainError("series_consistency: M >= 2 required");
    ZetaAssembly Z = zeta_motivic(S);

    TPoly one_minus_T(LPoly(1));
    one_minus_T.add_to_coeff(1, LPoly(-1));

    TPoly lhs_g = Z.total_global.expand_series(M);
    TPoly rhs_g = (TPoly(LPoly(1)) -
                   one_minus_T * poincare_truncated(S, M + 1).div_T())
                      .truncated(M);
    if (lhs_g != rhs_g)
        return false;

    TPoly lhs_l = Z.total_local.expand_series(M);
    TPoly rhs_l = (TPoly(LPoly::L(-(S.g + 1))) -
                   one_minus_T * poincare_fiber_truncated(S, M + 1).div_T())
                      .truncated(M);
    return lhs_l == rhs_l;
}

ClearedForm cleared_presentation(const MotRat& x)
{
    ClearedForm cf;
    cf.den = x.den();
    cf.num = x.num();
    if (cf.num.is_zero())
        return cf;
    long lo = 0;
    bool first = true;
    for (long d = 0; d <= cf.num.degree(); ++d) {
        if (cf.num.coeff(d).is_zero())
            continue;
        long e = cf.num.coeff(d).min_exp();
        lo = first ? e : std::min(lo, e);
        first = false;
    }
    if (lo < 0) {
        cf.shift = -lo;
        cf.num = cf.num.scaled(LPoly::L(cf.shift));
    }
    return cf;
}

} // namespace jetzeta
