#pragma once

#include <cstdint>
#include <vector>

#include "jetzeta/ff_oracle.hpp"
#include "jetzeta/semigroup.hpp"

namespace jetzeta::testing {

/* Exhaustive-search counterpart of represent_row: scans every tuple
 * (b_{i1}, ..., b_{i,i-1}) with b_{ij} < n_j and checks divisibility of the
 * remainder by gens[0]. Returns the unique match. */
std::vector<Int> brute_represent_row(const std::vector<Int>& gens, const std::vector<Int>& n,
                                     int i);

/* Full-product enumeration over F_q^{(g+1)(m+1)} via JetSystem::residual;
 * usable only for tiny instances. */
Int naive_count_jets(const SemigroupData& S, long m, std::uint32_t q, bool local);

/* Topological zeta function of the cusp singularity x1^2 = x0^3 at the
 * origin, evaluated from the numerical data of its minimal embedded
 * resolution (three blowups; exceptional multiplicities (2,2), (3,3), (6,5),
 * strict transform (1,1)). Independent of every code path in the library. */
Rat cusp_resolution_zeta_at(const Rat& s);

/* Deterministic pool of valid random instances with g in [1, max_g]. */
std::vector<SemigroupData> random_instances(int count, int max_g, const Int& bound,
                                            std::uint64_t seed);

} // namespace jetzeta::testing
