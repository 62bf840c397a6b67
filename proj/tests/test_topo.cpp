#include <doctest.h>

#include "jetzeta/errors.hpp"
#include "jetzeta/topo.hpp"
#include "oracles.hpp"

using namespace jetzeta;

namespace {

SemigroupData curve(std::initializer_list<long> v)
{
    return derive_structure(std::vector<Int>(v.begin(), v.end()));
}

QPoly qpoly(std::initializer_list<long> ascending)
{
    QPoly p;
    for (long c : ascending)
        p.emplace_back(c);
    return p;
}

} // namespace

TEST_CASE("closed forms of the worked curves")
{
    RatQs z1 = zeta_top(curve({4, 6, 13}));
    CHECK(z1.num == qpoly({592, 676, 188})); // 4(47s^2+169s+148)
    REQUIRE(z1.den.size() == 3);
    CHECK(z1.den[0] == std::make_pair(Int(2), Int(1)));
    CHECK(z1.den[1] == std::make_pair(Int(8), Int(6)));
    CHECK(z1.den[2] == std::make_pair(Int(37), Int(26)));

    RatQs z2 = zeta_top(curve({8, 12, 26, 53}));
    CHECK(z2.num == qpoly({387750, 493578, 206564, 28352}));
    REQUIRE(z2.den.size() == 4);
    CHECK(z2.den[3] == std::make_pair(Int(235), Int(106)));

    RatQs z3 = zeta_top(curve({2, 3}));
    CHECK(z3.num == qpoly({5, 4}));
    REQUIRE(z3.den.size() == 2);
    CHECK(z3.den[0] == std::make_pair(Int(1), Int(1)));
    CHECK(z3.den[1] == std::make_pair(Int(5), Int(6)));
}

TEST_CASE("value 1 at s = 0 and properness")
{
    for (const auto& S : testing::random_instances(40, 3, Int(150), 3)) {
        RatQs z = zeta_top(S);
        CHECK(zeta_top_eval(z, Rat(0)) == Rat(1));
        CHECK(qp_degree(z.num) < static_cast<long>(z.den.size()));
    }
}

TEST_CASE("poles_with_residues matches the table and the candidates")
{
    for (auto gens : {std::vector<Int>{4, 6, 13}, std::vector<Int>{8, 12, 26, 53},
                      std::vector<Int>{2, 3}}) {
        SemigroupData S = derive_structure(gens);
        auto sym = poles_with_residues(S); // ResidueMismatch on disagreement
        auto cand = candidate_poles(S);
        REQUIRE(sym.size() == cand.size());
        for (std::size_t i = 0; i < sym.size(); ++i) {
            CHECK(sym[i].value == cand[i].value);
            CHECK(sym[i].order == 1);
            CHECK(sym[i].residue != 0);
        }
    }
    for (const auto& S : testing::random_instances(40, 3, Int(150), 207))
        CHECK_NOTHROW(poles_with_residues(S));
    // g = 4: both middle residue rows (i = 2, 3) against partial fractions
    CHECK_NOTHROW(poles_with_residues(curve({16, 24, 52, 106, 213})));
}

TEST_CASE("pole at a denominator root throws PoleHit")
{
    RatQs z = zeta_top(curve({2, 3}));
    CHECK_THROWS_AS(zeta_top_eval(z, Rat(-1)), PoleHit);
    CHECK(zeta_top_eval(z, Rat(1)) == Rat(9, 22));
}

TEST_CASE("specialization of the motivic class onto the topological form")
{
    SemigroupData S = curve({4, 6, 13});
    std::vector<Rat> samples{Rat(0), Rat(1), Rat(2)};
    long double dev = check_specialization(S, 1e-6, samples);
    CHECK(dev < 1e-4L);

    // deviation contracts linearly: halving eps roughly halves it
    std::vector<Rat> s2{Rat(0), Rat(1, 2), Rat(1), Rat(2)};
    long double d1 = check_specialization(S, 1e-5, s2);
    long double d2 = check_specialization(S, 5e-6, s2);
    CHECK(d1 / d2 > 1.5L);
    CHECK(d1 / d2 < 2.5L);

    CHECK_THROWS_AS(check_specialization(S, 0.5, samples), DomainError);
}

TEST_CASE("specialization bridge on random instances")
{
    // ties the closed topological form to the motivic assembly beyond the
    // worked curves
    for (const auto& S : testing::random_instances(10, 3, Int(100), 733)) {
        long double dev = check_specialization(S, 1e-6, {Rat(0), Rat(1), Rat(2)});
        CHECK(dev < 1e-4L);
    }
}

TEST_CASE("resolution-data oracle for the cusp")
{
    RatQs z = zeta_top(curve({2, 3}));
    // (5+4s)/((1+s)(5+6s)) against the resolution formula, exact rationals
    for (const Rat& s : {Rat(0), Rat(1), Rat(2), Rat(1, 3), Rat(-7, 2)})
        CHECK(zeta_top_eval(z, s) == testing::cusp_resolution_zeta_at(s));
    CHECK(testing::cusp_resolution_zeta_at(Rat(0)) == Rat(1));
    CHECK(testing::cusp_resolution_zeta_at(Rat(1)) == Rat(9, 22));
    CHECK(testing::cusp_resolution_zeta_at(Rat(2)) == Rat(13, 51));
}

TEST_CASE("global and local zeta functions specialize identically")
{
    for (auto gens : {std::vector<Int>{4, 6, 13}, std::vector<Int>{8, 12, 26, 53},
                      std::vector<Int>{2, 3}})
        CHECK(global_equals_local_top(derive_structure(gens)));
    for (const auto& S : testing::random_instances(5, 3, Int(60), 311))
        CHECK(global_equals_local_top(S));
}
