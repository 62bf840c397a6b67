#include "jetzeta/flatness.hpp"

#include "jetzeta/errors.hpp"

namespace jetzeta {

FlatnessReport non_flat_threshold(const SemigroupData& S)
{
    FlatnessReport rep;
    rep.g = S.g;
    if (S.g >= 3) {
        rep.verdict = FlatnessReport::Verdict::NotFlatForAllM;
    } else if (S.g == 2) {
        Int den = (S.n[2] - 1) * (S.n[0] * S.n[1] - S.n[0] - S.n[1]);
        if (den <= 0)
            throw DomainError("non_flat_threshold: nonpositive denominator");
        rep.verdict = FlatnessReport::Verdict::NotFlatFrom;
        rep.m0 = cdiv(3 * S.n[0] * S.n[1] * S.n[2], den);
    } else {
        rep.verdict = FlatnessReport::Verdict::HypersurfaceFlat;
    }
    return rep;
}

} // namespace jetzeta
