#include "jetzeta/semigroup.hpp"

#include <random>

#include "jetzeta/errors.hpp"

namespace jetzeta {

std::vector<Int> represent_row(const std::vector<Int>& gens, const std::vector<Int>& e,
                               const std::vector<Int>& n, int i)
{
    if (i < 1 || i >= static_cast<int>(gens.size()))
        throw DomainError("represent_row: index out of range");
    std::vector<Int> row(i);
    Int rem = n[i] * gens[i];
    for (int j = i - 1; j >= 1; --j) {
        // the class of gens[j] generates e_j Z / e_{j-1} Z, so exactly one
        // b in [0, n_j) makes rem - b*gens[j] divisible by e_{j-1}
        bool found = false;
        for (Int bij = 0; bij < n[j]; ++bij) {
            if (divides(e[j - 1], rem - bij * gens[j])) {
                row[j] = bij;
                rem -= bij * gens[j];
                found = true;
                break;
            }
        }
        if (!found)
            throw NoRepresentation("no residue choice for b_{" + std::to_string(i) + "," +
                                   std::to_string(j) + "}");
    }
    if (rem < 0 || !divides(gens[0], rem))
        throw NoRepresentation("n_i*gens_i not representable with b_{i0} >= 0 (i = " +
                               std::to_string(i) + ")");
    row[0] = rem / gens[0];
    return row;
}

namespace {

/* Shared checking skeleton: calls report(name) on each violated condition
 * and stops early only when later checks would be meaningless. */
template <typename Report>
void check_conditions(const std::vector<Int>& gens, Report&& report)
{
    if (gens.size() < 2) {
        report("length >= 2");
        return;
    }
    for (const Int& v : gens)
        if (v <= 0) {
            report("entries positive");
            return;
        }
    for (std::size_t i = 0; i + 1 < gens.size(); ++i)
        if (gens[i] >= gens[i + 1]) {
            report("strictly increasing");
            return;
        }

    const int g = static_cast<int>(gens.size()) - 1;
    std::vector<Int> e(g + 1);
    e[0] = gens[0];
    for (int i = 1; i <= g; ++i)
        e[i] = gcd(e[i - 1], gens[i]);
    if (e[g] != 1)
        report("gcd of generators = 1");

    std::vector<Int> n(g + 1);
    bool quotients_ok = true;
    for (int i = 1; i <= g; ++i) {
        n[i] = e[i - 1] / e[i];
        if (n[i] < 2) {
            report("n_i = e_{i-1}/e_i >= 2");
            quotients_ok = false;
            break;
        }
    }
    if (!quotients_ok)
        return;

    for (int i = 1; i <= g - 1; ++i)
        if (n[i] * gens[i] >= gens[i + 1]) {
            report("n_i*gens_i < gens_{i+1}");
            return;
        }

    for (int i = 2; i <= g; ++i) {
        try {
            represent_row(gens, e, n, i);
        } catch (const NoRepresentation&) {
            report("n_i*gens_i representable over previous generators");
            return;
        }
    }
}

} // namespace

SemigroupData derive_structure(const std::vector<Int>& gens)
{
    check_conditions(gens, [](const std::string& cond) {
        throw InvalidSemigroup("condition violated: " + cond);
    });

    SemigroupData S;
    S.gens = gens;
    S.g = static_cast<int>(gens.size()) - 1;
    S.e.resize(S.g + 1);
    S.e[0] = gens[0];
    for (int i = 1; i <= S.g; ++i)
        S.e[i] = gcd(S.e[i - 1], gens[i]);
    S.n.resize(S.g + 1);
    for (int i = 1; i <= S.g; ++i)
        S.n[i] = S.e[i - 1] / S.e[i];

    S.b.resize(S.g + 1);
    for (int i = 1; i <= S.g; ++i)
        S.b[i] = represent_row(gens, S.e, S.n, i);
    S.n[0] = S.b[1][0]; // n_0 := b_{10} = gens[1]/e_1

    if (S.n[0] <= S.n[1] || gcd(S.n[0], S.n[1]) != 1)
        throw InvalidSemigroup("n_0 > n_1 coprime failed");
    for (int i = 2; i <= S.g; ++i)
        if (S.b[i][0] <= S.n[0])
            throw InvalidSemigroup("b_{i0} > n_0 failed");
    return S;
}

ValidationReport validate(const std::vector<Int>& gens)
{
    ValidationReport rep;
    check_conditions(gens, [&rep](const std::string& cond) { rep.violations.push_back(cond); });
    return rep;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) // inclusive
{
    return lo + rng() % (hi - lo + 1);
}

} // namespace

std::vector<Int> random_plane_semigroup(int g, const Int& bound, std::uint64_t seed)
{
    if (g < 1)
        throw DomainError("random_plane_semigroup: g >= 1 required");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(g));

    for (int attempt = 0; attempt < 20000; ++attempt) {
        // quotient sequence n_1..n_g, then gens[0] = n_1*...*n_g
        std::vector<Int> n(g + 1);
        Int bb0 = 1;
        for (int i = 1; i <= g; ++i) {
            n[i] = Int(draw(rng, 2, 4));
            bb0 *= n[i];
        }
        if (bb0 > bound)
            continue;

        Int e1 = bb0 / n[1];
        // n_0 > n_1 coprime; gens[1] = n_0 * e_1
        Int n0 = n[1] + 1 + Int(draw(rng, 0, 6));
        if (gcd(n0, n[1]) != 1)
            continue;
        std::vector<Int> gens{bb0, n0 * e1};
        if (gens[1] > bound || gens[1] <= gens[0])
            continue;

        // e_i chain for the choices above
        std::vector<Int> e(g + 1);
        e[0] = bb0;
        for (int i = 1; i <= g; ++i)
            e[i] = e[i - 1] / n[i];

        bool built = true;
        for (int i = 1; i <= g - 1; ++i) {
            // gens[i+1] = e_{i+1}*u with gcd(u, n_{i+1}) = 1,
            // n_i*gens[i] < gens[i+1] <= bound
            Int ulo = fdiv(n[i] * gens[i], e[i + 1]) + 1;
            Int uhi = fdiv(bound, e[i + 1]);
            if (ulo > uhi) {
                built = false;
                break;
            }
            bool picked = false;
            for (int tries = 0; tries < 16; ++tries) {
                Int span = uhi - ulo + 1;
                Int u = ulo + Int(static_cast<unsigned long>(rng() % 1000000007ull)) % span;
                if (gcd(u, n[i + 1]) != 1)
                    continue;
                gens.push_back(e[i + 1] * u);
                picked = true;
                break;
            }
            if (!picked) {
                built = false;
                break;
            }
        }
        if (!built)
            continue;
        if (validate(gens).ok())
            return gens;
    }
    throw GenerationFailed("no valid instance within retry budget (g = " + std::to_string(g) +
                           ", bound = " + bound.get_str() + ")");
}

} // namespace jetzeta
