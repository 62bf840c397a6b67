#include <doctest.h>

#include "jetzeta/errors.hpp"
#include "jetzeta/motivic.hpp"
#include "oracles.hpp"

using namespace jetzeta;

namespace {

SemigroupData curve(std::initializer_list<long> v)
{
    return derive_structure(std::vector<Int>(v.begin(), v.end()));
}

const LPoly L1 = LPoly::L(1);

LPoly lp(std::initializer_list<std::pair<long, long>> terms)
{
    LPoly p;
    for (auto [e, c] : terms)
        p += LPoly::monomial(Int(c), e);
    return p;
}

TPoly one_minus_T()
{
    TPoly p(LPoly(1));
    p.add_to_coeff(1, LPoly(-1));
    return p;
}

/* The known closed numerator of the (4,6,13) zeta function over
 * L^47 (1-L^-2 T)(1-L^-8 T^6)(1-L^-37 T^26), divided by (L-1). */
TPoly golden_p1()
{
    TPoly p;
    auto set = [&](long d, std::initializer_list<std::pair<long, long>> terms) {
        p.add_to_coeff(d, lp(terms));
    };
    set(0, {{46, 1}, {45, 1}});
    set(1, {{43, -1}, {42, -1}});
    set(2, {{43, 1}, {42, 1}});
    set(3, {{40, -1}});
    set(4, {{40, 1}});
    set(5, {{38, -1}, {37, -1}});
    set(7, {{35, -1}, {34, 1}});
    set(8, {{35, 1}, {34, -1}});
    set(9, {{32, -1}, {31, 1}});
    set(10, {{32, 1}, {31, -1}});
    set(11, {{29, -1}, {28, 1}});
    set(12, {{29, 1}, {28, -1}});
    set(13, {{25, 1}});
    set(14, {{25, -1}});
    set(19, {{18, -1}});
    set(20, {{18, 1}});
    set(21, {{15, -1}, {14, 1}});
    set(22, {{15, 1}, {14, -1}});
    set(23, {{12, -1}, {11, 1}});
    set(24, {{12, 1}, {11, -1}});
    set(25, {{9, -1}, {8, 1}});
    set(26, {{8, -2}});
    set(27, {{6, 1}, {5, 1}});
    set(28, {{6, -1}, {5, -1}});
    set(29, {{3, 1}});
    set(30, {{3, -1}});
    set(31, {{1, 1}, {0, 1}});
    return p;
}

} // namespace

TEST_CASE("branch terms of (4,6,13)")
{
    SemigroupData S = curve({4, 6, 13});

    MotRat a = term_side_zero(S);
    MotRat a_expected(TPoly::monomial((L1 - LPoly(1)) * LPoly::L(-3), 1), {DenomFactor{2, 1}});
    CHECK(a.equals(a_expected));
    CHECK(a.expand_series(1).coeff(1) == (L1 - LPoly(1)) * LPoly::L(-3));
    // the numerator vanishes at L = 1
    for (long d = 0; d <= a.num().degree(); ++d)
        CHECK(a.num().coeff(d).eval_one() == 0);

    MotRat b = term_main(S);
    CHECK(b.den() == std::vector<DenomFactor>{DenomFactor{8, 6}});
    CHECK(b.num().coeff(1) == LPoly::L(-3));           // r = 0
    CHECK(b.num().coeff(6) == LPoly::L(-8));           // r = 5: floor sums give 5
    CHECK(b.num().degree() == 6);

    MotRat d = term_infinite(S);
    MotRat d_expected(TPoly::monomial((L1 - LPoly(1)) * LPoly::L(-40), 27),
                      {DenomFactor{2, 1}, DenomFactor{37, 26}});
    CHECK(d.equals(d_expected));
}

TEST_CASE("inner main-branch exponents of (2,3)")
{
    SemigroupData S = curve({2, 3});
    MotRat b = term_main(S);
    const long expected[] = {0, 0, 1, 2, 3, 3}; // floor(r/3) + floor(r/2)
    for (long r = 0; r <= 5; ++r)
        CHECK(b.num().coeff(r + 1) == LPoly::L(-2 - expected[r]));
    MotRat d = term_infinite(S);
    MotRat d_expected(TPoly::monomial((L1 - LPoly(1)) * LPoly::L(-7), 7),
                      {DenomFactor{1, 1}, DenomFactor{5, 6}});
    CHECK(d.equals(d_expected));
}

TEST_CASE("side-branch polynomial Z_1 of (4,6,13)")
{
    SemigroupData S = curve({4, 6, 13});
    TPoly z = z_i_polynomial(S, 1);
    long monomials = 0;
    for (long d = 0; d <= z.degree(); ++d)
        if (!z.coeff(d).is_zero())
            ++monomials;
    CHECK(monomials == 14); // [6,13) and [19,26)
    CHECK(z.coeff(6) == LPoly::L(-11));
    CHECK(z.coeff(13).is_zero());
    CHECK_THROWS_AS(z_i_polynomial(S, 2), DomainError);
    CHECK_THROWS_AS(z_i_polynomial(curve({2, 3}), 1), DomainError);
}

TEST_CASE("side-branch polynomial Z_2 of (8,12,26,53)")
{
    TPoly z = z_i_polynomial(curve({8, 12, 26, 53}), 2);
    long monomials = 0;
    for (long d = 0; d <= z.degree(); ++d)
        if (!z.coeff(d).is_zero())
            ++monomials;
    CHECK(monomials == 54); // [26,53) and [79,106)
    CHECK(!z.coeff(26).is_zero());
    CHECK(z.coeff(53).is_zero());
    CHECK(!z.coeff(79).is_zero());
    CHECK(z.coeff(105 + 1).is_zero());
}

TEST_CASE("assembly identities")
{
    for (auto gens : {std::vector<Int>{4, 6, 13}, std::vector<Int>{2, 3}}) {
        SemigroupData S = derive_structure(gens);
        ZetaAssembly Z = zeta_motivic(S);

        MotRat sum = Z.termA + Z.termB;
        for (const auto& c : Z.termsC)
            sum = sum + c;
        sum = sum + Z.termD;
        MotRat global = MotRat(TPoly(LPoly(1))) - sum.mul_poly(one_minus_T());
        CHECK(global.equals(Z.total_global));

        MotRat bsum = Z.termB;
        for (const auto& c : Z.termsC)
            bsum = bsum + c;
        bsum = bsum + Z.termD;
        MotRat local = MotRat(TPoly(LPoly::L(-(S.g + 1)))) - bsum.mul_poly(one_minus_T());
        CHECK(local.equals(Z.total_local));

        // denominator factors stay inside the expected multiset
        auto pairs = structural_pairs(S);
        std::vector<DenomFactor> allowed{DenomFactor{S.g, 1}};
        for (const auto& p : pairs)
            allowed.push_back(DenomFactor{to_long(p.nu), to_long(p.N)});
        for (const auto& f : Z.total_global.den())
            CHECK(std::count(allowed.begin(), allowed.end(), f) >= 1);

        // global - local = (1 - L^{-(g+1)}) - (1-T) * termA
        MotRat diff = Z.total_global - Z.total_local;
        MotRat expected = MotRat(TPoly(LPoly(1) - LPoly::L(-(S.g + 1)))) -
                          Z.termA.mul_poly(one_minus_T());
        CHECK(diff.equals(expected));
    }
}

TEST_CASE("alternative grouping by denominator")
{
    // gauge part grouped as (1 - (L-1)L^{-(g+1)} - L^{-(g+1)}T)/(1 - L^{-g}T),
    // side polynomials carried as -(1-T)(L-1)Z_i, main as -(1-T)L^{-(g+1)}(sum),
    // infinite branch as -(L-1)L^{-(nu_g+g+1)}(1-T)T^{N_g}/denoms
    for (auto gens : {std::vector<Int>{4, 6, 13}, std::vector<Int>{8, 12, 26, 53},
                      std::vector<Int>{2, 3}}) {
        SemigroupData S = derive_structure(gens);
        auto pairs = structural_pairs(S);
        ZetaAssembly Z = zeta_motivic(S);

        TPoly gauge_num(LPoly(1) - (L1 - LPoly(1)) * LPoly::L(-(S.g + 1)));
        gauge_num.add_to_coeff(1, -LPoly::L(-(S.g + 1)));
        MotRat acc(gauge_num, {DenomFactor{S.g, 1}});

        acc = acc + Z.termB.mul_poly(-one_minus_T());
        for (const auto& c : Z.termsC)
            acc = acc + c.mul_poly(-one_minus_T());
        acc = acc + Z.termD.mul_poly(-one_minus_T());
        CHECK(acc.equals(Z.total_global));
    }
}

TEST_CASE("golden closed form of (4,6,13)")
{
    SemigroupData S = curve({4, 6, 13});
    MotRat z = zeta_motivic(S).total_global;
    ClearedForm cf = cleared_presentation(z);
    CHECK(cf.shift == 47);
    REQUIRE(cf.den == (std::vector<DenomFactor>{DenomFactor{2, 1}, DenomFactor{8, 6},
                                                DenomFactor{37, 26}}));
    TPoly p1;
    for (long d = 0; d <= cf.num.degree(); ++d)
        p1.add_to_coeff(d, cf.num.coeff(d).div_exact_L_minus_1());
    CHECK(p1 == golden_p1());
}

TEST_CASE("cleared form of the g = 3 curve")
{
    // the (8,12,26,53) zeta clears to L^299 with a degree-137 numerator
    // polynomial over Z[L] after the (L-1) factor is removed
    ClearedForm cf = cleared_presentation(zeta_motivic(curve({8, 12, 26, 53})).total_global);
    CHECK(cf.shift == 299);
    CHECK(cf.num.degree() == 137);
    for (long d = 0; d <= cf.num.degree(); ++d)
        if (!cf.num.coeff(d).is_zero())
            CHECK(cf.num.coeff(d).div_exact_L_minus_1().min_exp() >= 0);
}

TEST_CASE("series heads of the closed forms")
{
    SemigroupData S = curve({4, 6, 13});
    ZetaAssembly Z = zeta_motivic(S);
    TPoly g0 = Z.total_global.expand_series(0);
    CHECK(g0.coeff(0) == LPoly(1) - LPoly::L(-2)); // 1 - L^{-(g+1)} [Y_0]
    TPoly l1 = Z.total_local.expand_series(1);
    CHECK(l1.coeff(0).is_zero());
}

TEST_CASE("series consistency at moderate order")
{
    CHECK(series_consistency(curve({4, 6, 13}), 30));
    CHECK(series_consistency(curve({2, 3}), 25));
    CHECK(series_consistency(curve({8, 12, 26, 53}), 30));
    CHECK(series_consistency(curve({6, 9, 19}), 30));
    // a g = 4 chain exercises two middle side-branch polynomials
    CHECK(series_consistency(curve({16, 24, 52, 106, 213}), 40));
    CHECK_THROWS_AS(series_consistency(curve({2, 3}), 1), DomainError);
}
