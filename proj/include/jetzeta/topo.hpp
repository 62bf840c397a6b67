#pragma once

#include "jetzeta/invariants.hpp"
#include "jetzeta/motivic.hpp"
#include "jetzeta/qpoly.hpp"

namespace jetzeta {

/* Rational function of s over Q with the denominator kept factored as
 * prod (a_j + s*b_j); the leading factor is always (g + s). */
struct RatQs {
    QPoly num;
    std::vector<std::pair<Int, Int>> den; // (a, b) <-> a + s*b
};

/* Closed form over the factored denominator (g+s) * prod(nu_i + s*N_i):
 * nu_1/(nu_1+s*N_1)
 *   - sum_{i<g} (e_{i+1} N_i N_{i+1} / (n_i gens_i gens_{i+1}))
 *               (n_{i+1} gens_{i+1} - n_i gens_i)
 *               * s / ((nu_i+s*N_i)(nu_{i+1}+s*N_{i+1}))
 *   - s / ((g+s)(nu_g+s*N_g)) */
RatQs zeta_top(const SemigroupData& S);

/* num(s)/den(s); throws PoleHit on a denominator root. */
Rat zeta_top_eval(const RatQs& z, const Rat& s);

/* Candidates with residues obtained by exact partial fractions from the
 * closed form; every residue is cross-checked against the residue table and
 * a disagreement (or a vanishing numerator at a candidate) throws
 * ResidueMismatch. */
std::vector<PoleCandidate> poles_with_residues(const SemigroupData& S);

/* max over samples of |Z_mot(1+eps, (1+eps)^{-s}) - Z_top(s)|; the deviation
 * contracts linearly in eps. */
long double check_specialization(const SemigroupData& S, double eps,
                                 const std::vector<Rat>& s_samples);

/* The local and global motivic zeta functions specialize to the same
 * topological zeta function: their difference is
 * (1 - L^{-(g+1)}) - (1-T)*termA, and both parts vanish at L = 1. Verified
 * symbolically, then corroborated numerically against zeta_top. */
bool global_equals_local_top(const SemigroupData& S);

} // namespace jetzeta
