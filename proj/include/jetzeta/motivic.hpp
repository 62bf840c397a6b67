#pragma once

#include "jetzeta/jet_strata.hpp"
#include "jetzeta/motrat.hpp"

namespace jetzeta {

/* Closed form of the zeta function, grouped as in the main closed formula.
 * The stored terms are the generating-series contributions divided by T, so
 *   total_global = 1          - (1-T)*(termA + termB + sum termsC + termD)
 *   total_local  = L^{-(g+1)} - (1-T)*(        termB + sum termsC + termD)
 * hold as identities of rational functions. */
struct ZetaAssembly {
    MotRat termA;               // branch over the smooth part
    MotRat termB;               // main branch
    std::vector<MotRat> termsC; // finite side branches, i = 1..g-1
    MotRat termD;               // infinite branches
    MotRat total_global;
    MotRat total_local;
};

/* (L-1) L^{-(g+1)} T / (1 - L^{-g} T) */
MotRat term_side_zero(const SemigroupData& S);

/* L^{-(g+1)} T / (1 - L^{-nu_1} T^{N_1}) * sum_{r<N_1} L^{-sum_i [r/n_i]} T^r */
MotRat term_main(const SemigroupData& S);

/* Z_i = sum over the K_i x (e_{i+1}N_{i+1}/gens_{i+1}) block of intervals of
 * L^{-(c_{i,k}(m)+1)} T^m; defined for i = 1..g-1 (so g >= 2). */
TPoly z_i_polynomial(const SemigroupData& S, int i);

/* (L-1) L^{-(nu_g+g+1)} T^{N_g+1} / ((1 - L^{-g}T)(1 - L^{-nu_g}T^{N_g})) */
MotRat term_infinite(const SemigroupData& S);

ZetaAssembly zeta_motivic(const SemigroupData& S);

/* Compares the closed forms against the truncated generating series built
 * from the jet classes, through T^M (M >= 2), globally and locally. */
bool series_consistency(const SemigroupData& S, long M);

/* Presentation with the global L-power cleared out of the numerator:
 * x = num * L^{-shift} / prod(factors) with every numerator exponent >= 0
 * and shift minimal. */
struct ClearedForm {
    long shift = 0;
    TPoly num;
    std::vector<DenomFactor> den;
};
ClearedForm cleared_presentation(const MotRat& x);

} // namespace jetzeta
