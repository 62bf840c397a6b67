#pragma once

#include "jetzeta/semigroup.hpp"

namespace jetzeta {

/* Non-flatness of the jet-scheme family induced by the equisingular
 * deformation of the curve:
 *   g >= 3: not flat for every m >= 1
 *   g  = 2: not flat for all m >= m0 = ceil(3 n0 n1 n2 /
 *           ((n2-1)(n0 n1 - n0 - n1))); sufficient bound, not minimal
 *   g  = 1: the fibers are plane curves and the family stays flat */
struct FlatnessReport {
    enum class Verdict { NotFlatForAllM, NotFlatFrom, HypersurfaceFlat };

    int g = 0;
    Verdict verdict = Verdict::HypersurfaceFlat;
    Int m0; // set only for NotFlatFrom
};

FlatnessReport non_flat_threshold(const SemigroupData& S);

} // namespace jetzeta
