#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jetzeta/numeric.hpp"

namespace jetzeta {

/* Numerical data of a plane-branch semigroup, derived from its minimal
 * generators gens = (bb_0 < bb_1 < ... < bb_g), gcd(gens) = 1:
 *
 *   e[i] = gcd(bb_0, ..., bb_i)          e[0] = bb_0, e[g] = 1
 *   n[i] = e[i-1] / e[i] >= 2            i = 1..g
 *   n[0] = b_{10}                        the first-row exponent
 *   b[i] = (b_{i0}, ..., b_{i,i-1})      the unique representation
 *          n_i*bb_i = sum_j b_{ij}*bb_j  with 0 <= b_{ij} < n_j for j >= 1
 *
 * Rows satisfy n_i*bb_i < bb_{i+1} and b_{i0} > n_0 for i >= 2.
 */
struct SemigroupData {
    std::vector<Int> gens;
    int g = 0;
    std::vector<Int> e; // size g+1
    std::vector<Int> n; // size g+1, n[0] = b_{10}
    std::vector<std::vector<Int>> b; // size g+1, b[0] empty, b[i] has i entries
};

/* Per-condition validation outcome; at most one entry per named condition. */
struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/* Unique bounded representation of n_i*gens[i] over gens[0..i-1].
 * Works top-down: b_{ij} for j = i-1..1 is the only value in [0, n_j) that
 * keeps the remainder divisible by e_{j-1}; the final remainder must be a
 * non-negative multiple of gens[0]. Throws NoRepresentation otherwise.
 * Requires gens[0..i], e[0..i], n[1..i] already derived. */
std::vector<Int> represent_row(const std::vector<Int>& gens, const std::vector<Int>& e,
                               const std::vector<Int>& n, int i);

/* Derives the full structure; throws InvalidSemigroup with the failed
 * condition when gens is not a minimal generator tuple of a plane-branch
 * semigroup. */
SemigroupData derive_structure(const std::vector<Int>& gens);

/* Report-style variant of derive_structure: never throws, lists every
 * violated condition by name. Empty report iff derive_structure succeeds. */
ValidationReport validate(const std::vector<Int>& gens);

/* Random valid generator tuple with g+1 entries and gens[g] <= bound.
 * Deterministic in (g, bound, seed); throws GenerationFailed when the retry
 * budget is exhausted. */
std::vector<Int> random_plane_semigroup(int g, const Int& bound, std::uint64_t seed);

} // namespace jetzeta
