#pragma once

#include <cstdint>

#include "jetzeta/semigroup.hpp"

namespace jetzeta {

/* Truncated jet equations of the curve over F_q. Coordinates are x_i^{(j)}
 * for i = 0..g, j = 0..m; equation k contributes F_k^{(l)} = [t^l] f_k(x(t))
 * for l = 0..m, and F_k^{(l)} only involves superscripts <= l. The system is
 * represented by evaluation on truncated series, never by expanded
 * polynomials. Requires q prime, q < 2^16 and q not dividing any n_i. */
struct JetSystem {
    SemigroupData S;
    long m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint64_t> n; // n_0..n_g
    std::vector<std::vector<std::uint64_t>> b; // b[i] = row i, i = 1..g

    /* F_k^{(0..m)} at a point, point[i] = coefficients of x_i(t) (k = 1..g) */
    std::vector<std::uint32_t> residual(int k,
                                        const std::vector<std::vector<std::uint32_t>>& point) const;
};

JetSystem build_jet_system(const SemigroupData& S, long m, std::uint32_t q);

inline constexpr std::uint64_t kDefaultBudget = 2000000000ull;

/* Number of F_q-points of the m-jet scheme (of the fiber over the origin
 * when local). Layered enumeration: the (x_0, x_1) block is enumerated
 * level-by-level with pruning on the coefficients of f_1, then each x_i
 * block for i >= 2 extends the solutions. Deterministic for any thread
 * count; throws BudgetExceeded past the operation budget. */
Int count_jets(const JetSystem& sys, bool local, int threads = 1,
               std::uint64_t budget = kDefaultBudget);
Int count_jets(const SemigroupData& S, long m, std::uint32_t q, bool local, int threads = 1,
               std::uint64_t budget = kDefaultBudget);

struct VerifyOutcome {
    Int count;
    Int expected;
    bool match = false;
    /* q divides some generator: a mismatch at such q is a finding to report,
     * not an assertion failure */
    bool q_divides_generator = false;
};

/* Compares count_jets against the jet class (fiber class when local)
 * evaluated at L = q. */
VerifyOutcome verify_class(const SemigroupData& S, long m, std::uint32_t q, bool local,
                           int threads = 1, std::uint64_t budget = kDefaultBudget);

} // namespace jetzeta
