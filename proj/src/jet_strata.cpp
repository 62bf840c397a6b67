#include "jetzeta/jet_strata.hpp"

#include "jetzeta/errors.hpp"

namespace jetzeta {

int window_index(const SemigroupData& S, const Int& k, const Int& m)
{
    if (k < 1 || m * S.e[1] < k * S.n[1] * S.gens[1])
        throw DomainError("window_index: m below k*n_0*n_1");
    for (int i = 1; i < S.g; ++i)
        if (m * S.e[1] < k * S.n[i + 1] * S.gens[i + 1])
            return i;
    return S.g;
}

std::vector<ComponentDescriptor> components(const SemigroupData& S, const Int& m)
{
    if (m < 1)
        throw DomainError("components: m >= 1 required");
    std::vector<ComponentDescriptor> out;

    ComponentDescriptor main;
    main.kind = ComponentDescriptor::Kind::Main;
    main.codim = codim_B(S, m);
    out.push_back(main);

    // l with l*n_0*n_1 < m <= (l+1)*n_0*n_1
    Int l = fdiv(m - 1, S.n[0] * S.n[1]);
    Int min_codim = main.codim;
    for (Int k = 1; k <= l; ++k) {
        if (S.g >= 2 && is_D_empty(S, m, k))
            continue;
        ComponentDescriptor side;
        side.kind = ComponentDescriptor::Kind::Side;
        side.k = k;
        side.codim = c_ik(S, window_index(S, k, m), k, m);
        if (side.codim < min_codim)
            min_codim = side.codim;
        out.push_back(side);
    }
    for (auto& c : out)
        c.maximal = (c.codim == min_codim);
    return out;
}

LPoly fiber_class(const SemigroupData& S, const Int& m)
{
    if (m < 0)
        throw DomainError("fiber_class: m >= 0 required");
    const Int ambient = Int(S.g + 1) * (m + 1);

    // refined main stratum, an affine space for every m
    LPoly cls = LPoly::L(to_long(ambient - c_refined(S, m)));

    // side strata k = 1..l with l*n_0*n_1 <= m < (l+1)*n_0*n_1
    Int l = fdiv(m, S.n[0] * S.n[1]);
    const LPoly torus = LPoly::L(1) - LPoly(1); // L - 1
    for (Int k = 1; k <= l; ++k) {
        if (S.g >= 2 && is_D_empty(S, m, k))
            continue;
        Int codim = c_ik(S, window_index(S, k, m), k, m);
        cls += torus * LPoly::L(to_long(ambient - codim - 1));
    }
    return cls;
}

LPoly jet_class(const SemigroupData& S, const Int& m)
{
    LPoly off_origin = (LPoly::L(1) - LPoly(1)) * LPoly::L(to_long(m));
    return off_origin + fiber_class(S, m);
}

namespace {

TPoly poincare_sum(const SemigroupData& S, long M, bool fiber_only)
{
    if (M < 1)
        throw DomainError("poincare_truncated: M >= 1 required");
    TPoly r;
    for (long m = 0; m < M; ++m) {
        LPoly cls = fiber_only ? fiber_class(S, m) : jet_class(S, m);
        r.add_to_coeff(m + 1, cls * LPoly::L(-(S.g + 1) * (m + 1)));
    }
    return r;
}

} // namespace

TPoly poincare_truncated(const SemigroupData& S, long M)
{
    return poincare_sum(S, M, false);
}

TPoly poincare_fiber_truncated(const SemigroupData& S, long M)
{
    return poincare_sum(S, M, true);
}

} // namespace jetzeta
