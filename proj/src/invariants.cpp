#include "jetzeta/invariants.hpp"

#include "jetzeta/errors.hpp"

namespace jetzeta {

namespace {

Int exact_div(const Int& a, const Int& b, const char* what)
{
    if (!divides(b, a))
        throw DomainError(std::string(what) + ": not divisible");
    return a / b;
}

} // namespace

std::vector<StructuralPair> structural_pairs(const SemigroupData& S)
{
    std::vector<StructuralPair> pairs;
    pairs.reserve(S.g);
    for (int i = 1; i <= S.g; ++i) {
        StructuralPair p;
        p.i = i;
        p.N = S.gens[i] / S.e[i];
        for (int l = i; l <= S.g; ++l)
            p.N = lcm(p.N, S.n[l]);

        Int head = 0; // sum_{l<=i} gens_l - sum_{1<=l<i} n_l*gens_l
        for (int l = 0; l <= i; ++l)
            head += S.gens[l];
        for (int l = 1; l <= i - 1; ++l)
            head -= S.n[l] * S.gens[l];
        Rat nu = make_rat(head, S.n[i] * S.gens[i]) + (i - 1);
        for (int l = i + 1; l <= S.g; ++l)
            nu += make_rat(1, S.n[l]);
        nu *= Rat(p.N);
        if (nu.get_den() != 1)
            throw DomainError("nu_" + std::to_string(i) + " is not an integer");
        p.nu = nu.get_num();
        pairs.push_back(std::move(p));
    }
    return pairs;
}

Rat lct(const SemigroupData& S)
{
    Rat r(0);
    for (int l = 0; l <= S.g; ++l)
        r += make_rat(1, S.n[l]);
    return r;
}

int j_of_k(const SemigroupData& S, const Int& k)
{
    if (k < 1)
        throw DomainError("j_of_k: k >= 1 required");
    if (S.g == 1)
        return 2;
    int j = 2;
    Int prod = 1;
    for (int l = 3; l <= S.g + 1; ++l) {
        prod *= S.n[l - 1]; // n_2 * ... * n_{l-1}
        if (!divides(prod, k))
            break;
        j = l;
    }
    return j;
}

Int K_index(const SemigroupData& S, int i)
{
    if (i < 1 || i > S.g)
        throw DomainError("K_index: i out of range");
    auto pairs = structural_pairs(S);
    return exact_div(S.e[i] * pairs[static_cast<std::size_t>(i - 1)].N, S.n[i] * S.gens[i], "K_i");
}

Int c_ik(const SemigroupData& S, int i, const Int& k, const Int& m)
{
    if (i < 1 || i > S.g || k < 1)
        throw DomainError("c_ik: bad (i, k)");
    if (i >= j_of_k(S, k))
        throw DomainError("c_ik: i >= j(k), stratum empty");
    // window k*n_i*gens_i/e_1 <= m < k*n_{i+1}*gens_{i+1}/e_1, cross-multiplied
    if (m * S.e[1] < k * S.n[i] * S.gens[i])
        throw DomainError("c_ik: m below the window of (i, k)");
    if (i < S.g && m * S.e[1] >= k * S.n[i + 1] * S.gens[i + 1])
        throw DomainError("c_ik: m above the window of (i, k)");

    Int c = k * (S.n[0] + S.n[1]);
    for (int l = 2; l <= i; ++l)
        c += exact_div(k * S.gens[l], S.e[1], "k*gens_l/e_1");
    for (int l = 1; l <= i; ++l)
        c += m - exact_div(k * S.n[l] * S.gens[l], S.e[1], "k*n_l*gens_l/e_1") + 1;
    for (int l = i + 1; l <= S.g; ++l)
        c += fdiv(m, S.n[l]) + 1;
    return c;
}

Int codim_B(const SemigroupData& S, const Int& m)
{
    if (m < 1)
        throw DomainError("codim_B: m >= 1 required");
    Int period = S.n[0] * S.n[1];
    if (divides(period, m)) {
        // m = (l+1)*n_0*n_1
        Int mult = m / period;
        Int c = S.g + mult * (S.n[0] + S.n[1]);
        for (int i = 2; i <= S.g; ++i)
            c += fdiv(m, S.n[i]);
        return c;
    }
    return c_refined(S, m);
}

Int c_refined(const SemigroupData& S, const Int& m)
{
    Int c = S.g + 1;
    for (int i = 0; i <= S.g; ++i)
        c += fdiv(m, S.n[i]);
    return c;
}

bool is_D_empty(const SemigroupData& S, const Int& m, const Int& k)
{
    if (k < 1 || m < k * S.n[0] * S.n[1])
        throw DomainError("is_D_empty: requires m >= k*n_0*n_1");
    int j = j_of_k(S, k);
    if (j == S.g + 1)
        return false;
    return m * S.e[1] >= k * S.n[j] * S.gens[j];
}

MInterval interval(const SemigroupData& S, int i, const Int& k, const Int& p)
{
    if (i < 1 || i > S.g - 1)
        throw DomainError("interval: i must lie in 1..g-1");
    Int kprime = k;
    if (i >= 2) {
        Int prod = 1;
        for (int l = 2; l <= i; ++l)
            prod *= S.n[l];
        if (!divides(prod, k))
            throw DomainError("interval: k not a multiple of n_2*...*n_i");
        kprime = k / prod;
    }
    if (p < 1 || p > kprime)
        throw DomainError("interval: p out of range");
    Int start = exact_div(k * S.n[i] * S.gens[i], S.e[1], "k*n_i*gens_i/e_1");
    Int len = exact_div(S.n[i + 1] * S.gens[i + 1] - S.n[i] * S.gens[i], S.e[i], "l_i");
    return MInterval{start + (p - 1) * len, start + p * len};
}

std::vector<PoleCandidate> candidate_poles(const SemigroupData& S)
{
    auto pairs = structural_pairs(S);
    std::vector<PoleCandidate> out;
    out.reserve(S.g + 1);

    PoleCandidate gauge;
    gauge.value = Rat(-S.g);
    gauge.source = PoleCandidate::Source::Gauge;
    gauge.nu = S.g;
    gauge.N = 1;
    out.push_back(gauge);

    for (int i = S.g; i >= 1; --i) {
        const auto& p = pairs[static_cast<std::size_t>(i - 1)];
        PoleCandidate c;
        c.value = make_rat(-p.nu, p.N);
        c.source = PoleCandidate::Source::Structural;
        c.index = i;
        c.nu = p.nu;
        c.N = p.N;
        out.push_back(c);
    }
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (!(out[i].value < out[i + 1].value))
            throw DomainError("candidate poles not strictly increasing");
    return out;
}

std::vector<PoleCandidate> residues(const SemigroupData& S)
{
    auto pairs = structural_pairs(S);
    auto nu = [&](int i) { return pairs[static_cast<std::size_t>(i - 1)].nu; };
    auto N = [&](int i) { return pairs[static_cast<std::size_t>(i - 1)].N; };
    auto ratio = [&](int i) { return make_rat(nu(i), N(i)); };
    const int g = S.g;

    auto out = candidate_poles(S);
    for (auto& c : out) {
        if (c.source == PoleCandidate::Source::Gauge) {
            c.residue = make_rat(g, nu(g) - g * N(g));
            continue;
        }
        const int i = c.index;
        Rat R;
        if (g == 1) {
            R = Rat(N(1)) + Rat(1) / (Rat(g) - ratio(1));
        } else if (i == 1) {
            R = Rat(N(1)) +
                make_rat(S.e[2] * N(1), S.n[1] * S.gens[1] * S.gens[2]) *
                    Rat(S.n[2] * S.gens[2] - S.n[1] * S.gens[1]) / (ratio(2) - ratio(1));
        } else if (i < g) {
            R = make_rat(S.e[i] * N(i), S.n[i - 1] * S.gens[i - 1] * S.gens[i]) *
                    Rat(S.n[i] * S.gens[i] - S.n[i - 1] * S.gens[i - 1]) /
                    (ratio(i - 1) - ratio(i)) +
                make_rat(S.e[i + 1] * N(i), S.n[i] * S.gens[i] * S.gens[i + 1]) *
                    Rat(S.n[i + 1] * S.gens[i + 1] - S.n[i] * S.gens[i]) /
                    (ratio(i + 1) - ratio(i));
        } else {
            R = make_rat(N(g), S.n[g - 1] * S.gens[g - 1] * S.gens[g]) *
                    Rat(S.n[g] * S.gens[g] - S.n[g - 1] * S.gens[g - 1]) /
                    (ratio(g - 1) - ratio(g)) +
                Rat(1) / (Rat(g) - ratio(g));
        }
        c.residue = make_rat(nu(i), N(i) * N(i)) * R;
    }
    return out;
}

} // namespace jetzeta
