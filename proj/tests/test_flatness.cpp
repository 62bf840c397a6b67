#include <doctest.h>

#include "jetzeta/flatness.hpp"
#include "oracles.hpp"

using namespace jetzeta;

TEST_CASE("verdicts by the number of generators")
{
    auto r1 = non_flat_threshold(derive_structure({Int(2), Int(3)}));
    CHECK(r1.verdict == FlatnessReport::Verdict::HypersurfaceFlat);

    auto r2 = non_flat_threshold(derive_structure({Int(4), Int(6), Int(13)}));
    CHECK(r2.verdict == FlatnessReport::Verdict::NotFlatFrom);
    CHECK(r2.m0 == 36); // ceil(3*3*2*2 / ((2-1)(6-5)))

    auto r3 = non_flat_threshold(derive_structure({Int(8), Int(12), Int(26), Int(53)}));
    CHECK(r3.verdict == FlatnessReport::Verdict::NotFlatForAllM);
}

TEST_CASE("threshold denominator positive and m0 >= 1 for random g = 2")
{
    for (const auto& S : testing::random_instances(50, 2, Int(200), 123)) {
        if (S.g != 2)
            continue;
        CHECK((S.n[2] - 1) * (S.n[0] * S.n[1] - S.n[0] - S.n[1]) > 0);
        auto rep = non_flat_threshold(S);
        CHECK(rep.verdict == FlatnessReport::Verdict::NotFlatFrom);
        CHECK(rep.m0 >= 1);
    }
}
