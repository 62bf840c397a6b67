#pragma once

#include <vector>

#include "jetzeta/semigroup.hpp"

namespace jetzeta {

/* The pair (N_i, nu_i) attached to generator i:
 *   N_i  = lcm(gens_i/e_i, n_i, ..., n_g)
 *   nu_i = N_i*( (sum_{l<=i} gens_l - sum_{1<=l<i} n_l*gens_l)/(n_i*gens_i)
 *                + (i-1) + sum_{l>i} 1/n_l )
 * Both are positive integers; -nu_i/N_i are the non-gauge candidate poles. */
struct StructuralPair {
    int i = 0;
    Int N;
    Int nu;
};

struct PoleCandidate {
    enum class Source { Gauge, Structural };

    Rat value;      // -g or -nu_i/N_i, in lowest terms
    Source source = Source::Gauge;
    int index = 0;  // i for structural candidates, 0 for the gauge pole
    Int nu, N;      // unreduced pair; (g, 1) for the gauge pole
    Rat residue;    // 0 until filled
    int order = 1;
};

/* Half-open integer interval [lo, hi). */
struct MInterval {
    Int lo, hi;
};

std::vector<StructuralPair> structural_pairs(const SemigroupData& S);

/* log canonical threshold = sum_{l=0..g} 1/n_l = nu_1/N_1 */
Rat lct(const SemigroupData& S);

/* Branch-length index of the side branch k: 2 when n_2 does not divide k,
 * otherwise the largest l with n_2*...*n_{l-1} | k. Value g+1 marks an
 * infinite branch. */
int j_of_k(const SemigroupData& S, const Int& k);

/* K_i = e_i*N_i/(n_i*gens_i), a positive integer (= N_1/(n_0 n_1) for i=1) */
Int K_index(const SemigroupData& S, int i);

/* Codimension c_{i,k}(m) of the side stratum, defined on the window
 * k*n_i*gens_i/e_1 <= m < k*n_{i+1}*gens_{i+1}/e_1 with i < j(k);
 * throws DomainError outside the window. */
Int c_ik(const SemigroupData& S, int i, const Int& k, const Int& m);

/* Codimension of the closed main stratum B_m (m >= 1). */
Int codim_B(const SemigroupData& S, const Int& m);

/* c(m) = g+1+sum_i floor(m/n_i): codimension of the refined main stratum. */
Int c_refined(const SemigroupData& S, const Int& m);

/* D_{m,k} empty iff m >= k*n_{j(k)}*gens_{j(k)}/e_1 (never on an infinite
 * branch); requires m >= k*n_0*n_1. */
bool is_D_empty(const SemigroupData& S, const Int& m, const Int& k);

/* p-th interval of the window of (i,k): for i >= 2, k must be a multiple of
 * n_2*...*n_i and 1 <= p <= k/(n_2*...*n_i); for i = 1, 1 <= p <= k. */
MInterval interval(const SemigroupData& S, int i, const Int& k, const Int& p);

/* g+1 candidates sorted ascending: -g < -nu_g/N_g < ... < -nu_1/N_1;
 * residues left at 0. */
std::vector<PoleCandidate> candidate_poles(const SemigroupData& S);

/* Candidates with residues from the closed-form table:
 * at -g the residue is g/(nu_g - g*N_g); at -nu_i/N_i it is nu_i/N_i^2
 * times the table entry R_i. */
std::vector<PoleCandidate> residues(const SemigroupData& S);

} // namespace jetzeta
