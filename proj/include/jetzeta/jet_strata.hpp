#pragma once

#include "jetzeta/invariants.hpp"
#include "jetzeta/tpoly.hpp"

namespace jetzeta {

/* One irreducible component of the jet fiber over the origin: the closed
 * main stratum B_m, or the closure C_{m,k} of a side stratum. */
struct ComponentDescriptor {
    enum class Kind { Main, Side };

    Kind kind = Kind::Main;
    Int k;   // side-branch index, 0 for Main
    Int codim;
    bool maximal = false; // minimal codimension among the components of m
};

/* Window index i of (k, m): k*n_i*gens_i/e_1 <= m < k*n_{i+1}*gens_{i+1}/e_1.
 * Defined for m >= k*n_0*n_1; may equal j(k) (empty-stratum range). */
int window_index(const SemigroupData& S, const Int& k, const Int& m);

/* Components of the fiber over the origin at truncation order m >= 1,
 * main component first, then sides by increasing k. */
std::vector<ComponentDescriptor> components(const SemigroupData& S, const Int& m);

/* Class of the reduced fiber over the origin: the refined main stratum plus
 * every nonempty side stratum. */
LPoly fiber_class(const SemigroupData& S, const Int& m);

/* Class of the whole m-jet scheme: (L-1)L^m off the origin plus the fiber. */
LPoly jet_class(const SemigroupData& S, const Int& m);

/* sum_{m=0}^{M-1} jet_class(m) * L^{-(g+1)(m+1)} * T^{m+1} */
TPoly poincare_truncated(const SemigroupData& S, long M);

/* Same sum with fiber_class(m) in place of jet_class(m). */
TPoly poincare_fiber_truncated(const SemigroupData& S, long M);

} // namespace jetzeta
