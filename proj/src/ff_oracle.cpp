#include "jetzeta/ff_oracle.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "jetzeta/errors.hpp"
#include "jetzeta/jet_strata.hpp"

namespace jetzeta {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr int kMaxExponent = 512; // bound for the Pascal table

struct Mod {
    u32 q = 0;
    u32 add(u32 a, u32 b) const
    {
        u32 s = a + b;
        return s >= q ? s - q : s;
    }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + q - b; }
    u32 mul(u32 a, u32 b) const { return static_cast<u32>(u64(a) * b % q); }
    u32 pow(u32 a, u64 e) const
    {
        u32 r = 1 % q;
        u32 p = a % q;
        while (e) {
            if (e & 1)
                r = mul(r, p);
            p = mul(p, p);
            e >>= 1;
        }
        return r;
    }
    u32 inv(u32 a) const { return pow(a, q - 2); }
};

bool is_prime_u32(u32 v)
{
    if (v < 2)
        return false;
    for (u32 d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

using Series = std::vector<u32>; // length m+1

Series series_mul(const Series& a, const Series& b, const Mod& md, u64& ops)
{
    Series r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            r[i + j] = md.add(r[i + j], md.mul(a[i], b[j]));
            ++ops;
        }
    }
    return r;
}

Series series_pow(const Series& base, u64 e, const Mod& md, u64& ops)
{
    Series r(base.size(), 0);
    r[0] = 1 % md.q;
    Series p = base;
    while (e) {
        if (e & 1)
            r = series_mul(r, p, md, ops);
        p = series_mul(p, p, md, ops);
        e >>= 1;
    }
    return r;
}

/* A truncated series together with all powers 1..n, maintained under
 * coefficient appends in increasing level order. W[0] is the constant 1. */
struct PowTower {
    int n = 1;
    std::vector<Series> W;

    void init(int n_, long len)
    {
        n = n_;
        W.assign(static_cast<std::size_t>(n) + 1, Series(static_cast<std::size_t>(len), 0));
        W[0][0] = 1;
    }

    const Series& top() const { return W[static_cast<std::size_t>(n)]; }
    const Series& base() const { return W[1]; }
    u32 head() const { return W[1][0]; }

    /* gamma += v * t^l, assuming gamma had no terms of degree >= l */
    void append(u32 v, long l, const Mod& md, const std::vector<std::vector<u32>>& binom,
                u64& ops)
    {
        const long len = static_cast<long>(W[0].size());
        if (v == 0)
            return;
        std::vector<u32> vpow(static_cast<std::size_t>(n) + 1);
        vpow[0] = 1;
        for (int i = 1; i <= n; ++i)
            vpow[static_cast<std::size_t>(i)] = md.mul(vpow[static_cast<std::size_t>(i - 1)], v);
        for (int p = n; p >= 1; --p) {
            auto& Wp = W[static_cast<std::size_t>(p)];
            for (int i = 1; i <= p && static_cast<long>(i) * l < len; ++i) {
                const u32 coef = md.mul(binom[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)],
                                        vpow[static_cast<std::size_t>(i)]);
                if (coef == 0)
                    continue;
                const auto& Wlow = W[static_cast<std::size_t>(p - i)];
                for (long c = static_cast<long>(i) * l; c < len; ++c) {
                    u32 term = Wlow[static_cast<std::size_t>(c - static_cast<long>(i) * l)];
                    if (term)
                        Wp[static_cast<std::size_t>(c)] = md.add(Wp[static_cast<std::size_t>(c)],
                                                                 md.mul(coef, term));
                    ++ops;
                }
            }
        }
    }
};

u128 u128_pow(u32 base, long e)
{
    u128 r = 1;
    for (long i = 0; i < e; ++i) {
        if (r > (~u128(0)) / base)
            throw DomainError("count_jets: count exceeds the 128-bit accumulator");
        r *= base;
    }
    return r;
}

struct Ctx {
    const JetSystem* sys = nullptr;
    Mod md;
    bool local = false;
    long m = 0;
    int g = 0;

    std::vector<std::vector<u32>> binom; // Pascal mod q
    // per-exponent root lists: roots_for[i][r] = { w : w^{n_i} = r }, i = 0..g
    std::vector<std::vector<std::vector<u32>>> roots_for;

    std::atomic<u64>* ops_total = nullptr;
    u64 budget = kDefaultBudget;
    u64 ops_local = 0;

    // DFS storage: block-1 towers per depth, and per block i >= 2
    std::vector<PowTower> t0, t1;
    std::vector<std::vector<PowTower>> ti; // ti[i][depth]
    std::vector<Series> rhs;               // rhs[i] for block i
    std::vector<Series> point;             // materialized coordinates

    void charge(u64 amount)
    {
        ops_local += amount;
        if (ops_local >= 16384) {
            u64 seen = ops_total->fetch_add(ops_local, std::memory_order_relaxed) + ops_local;
            ops_local = 0;
            if (seen > budget)
                throw BudgetExceeded("jet enumeration exceeded the operation budget");
        }
    }
};

u128 solve_block(Ctx& c, int i, long depth);

/* Extend into the x_i blocks once the (x_0, x_1) part is fully chosen. */
u128 descend_blocks(Ctx& c)
{
    if (c.g == 1)
        return 1;
    c.point[0] = c.t0[static_cast<std::size_t>(c.m + 1)].base();
    c.point[1] = c.t1[static_cast<std::size_t>(c.m + 1)].base();
    return solve_block(c, 2, 0);
}

/* Level `depth` of the x_i block (i >= 2): choose x_i^{(depth)} subject to
 * F_i^{(depth)} = 0 with the right-hand side c.rhs[i] fixed. */
u128 solve_block(Ctx& c, int i, long depth)
{
    const u64 ni = c.sys->n[static_cast<std::size_t>(i)];
    auto& towers = c.ti[static_cast<std::size_t>(i)];

    if (depth == 0) {
        // fresh right-hand side for this block: prod_j point[j]^{b_ij}
        u64 ops = 0;
        Series r(static_cast<std::size_t>(c.m) + 1, 0);
        r[0] = 1;
        for (int j = 0; j < i; ++j)
            r = series_mul(r, series_pow(c.point[static_cast<std::size_t>(j)],
                                         c.sys->b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                         c.md, ops),
                           c.md, ops);
        c.charge(ops);
        c.rhs[static_cast<std::size_t>(i)] = std::move(r);
        towers[0].init(static_cast<int>(ni), c.m + 1);
    }

    const Series& rhs = c.rhs[static_cast<std::size_t>(i)];
    PowTower& state = towers[static_cast<std::size_t>(depth)];
    const bool last = depth == c.m;
    c.charge(4);

    auto child = [&](u32 w) -> u128 {
        towers[static_cast<std::size_t>(depth + 1)] = state;
        u64 ops = 0;
        towers[static_cast<std::size_t>(depth + 1)].append(w, depth, c.md, c.binom, ops);
        c.charge(ops + 1);
        if (depth + 1 <= c.m)
            return solve_block(c, i, depth + 1);
        // block complete: materialize and go deeper
        c.point[static_cast<std::size_t>(i)] = towers[static_cast<std::size_t>(c.m + 1)].base();
        return i == c.g ? u128(1) : solve_block(c, i + 1, 0);
    };

    if (depth == 0) {
        if (c.local) {
            if (rhs[0] != 0)
                return 0;
            if (last && i == c.g)
                return 1;
            return child(0);
        }
        const auto& roots = c.roots_for[static_cast<std::size_t>(i)][rhs[0]];
        if (last && i == c.g)
            return u128(roots.size());
        u128 total = 0;
        for (u32 w : roots)
            total += child(w);
        return total;
    }

    // F_i^{(depth)} = (top[depth] + B*w) - rhs[depth], B = n_i * head^{n_i - 1}
    const u32 head = state.head();
    const u32 B = head == 0 ? 0
                            : c.md.mul(static_cast<u32>(ni % c.md.q),
                                       c.md.pow(head, ni - 1));
    const u32 C = c.md.sub(state.top()[static_cast<std::size_t>(depth)],
                           rhs[static_cast<std::size_t>(depth)]);
    if (B != 0) {
        // every deeper level is uniquely solvable as well
        if (i == c.g)
            return 1;
        const u32 w = c.md.mul(c.md.sub(0, C), c.md.inv(B));
        return child(w);
    }
    if (C != 0)
        return 0;
    if (last && i == c.g)
        return c.md.q;
    u128 total = 0;
    for (u32 w = 0; w < c.md.q; ++w)
        total += child(w);
    return total;
}

/* Level `depth` of the (x_0, x_1) block: choose the pair
 * (x_0^{(depth)}, x_1^{(depth)}) subject to F_1^{(depth)} = 0. */
u128 solve_pair(Ctx& c, long depth)
{
    const u64 n0 = c.sys->n[0];
    const u64 n1 = c.sys->n[1];
    PowTower& s0 = c.t0[static_cast<std::size_t>(depth)];
    PowTower& s1 = c.t1[static_cast<std::size_t>(depth)];
    const bool last = depth == c.m;
    c.charge(4);

    auto child = [&](u32 u, u32 v) -> u128 {
        u64 ops = 0;
        c.t0[static_cast<std::size_t>(depth + 1)] = s0;
        c.t0[static_cast<std::size_t>(depth + 1)].append(u, depth, c.md, c.binom, ops);
        c.t1[static_cast<std::size_t>(depth + 1)] = s1;
        c.t1[static_cast<std::size_t>(depth + 1)].append(v, depth, c.md, c.binom, ops);
        c.charge(ops + 1);
        if (depth + 1 <= c.m)
            return solve_pair(c, depth + 1);
        return descend_blocks(c);
    };

    if (depth == 0) {
        if (c.local) {
            if (last && c.g == 1)
                return 1;
            return child(0, 0);
        }
        // v^{n_1} = u^{n_0}: bucket the roots by the common value
        u128 total = 0;
        for (u32 u = 0; u < c.md.q; ++u) {
            const u32 w = c.md.pow(u, n0);
            const auto& vs = c.roots_for[1][w];
            c.charge(vs.size() + 1);
            if (last && c.g == 1) {
                total += vs.size();
                continue;
            }
            for (u32 v : vs)
                total += child(u, v);
        }
        return total;
    }

    // F_1^{(depth)} = (top1[depth] + B*v) - (top0[depth] + A*u)
    const u32 h0 = s0.head();
    const u32 h1 = s1.head();
    const u32 A = h0 == 0 ? 0 : c.md.mul(static_cast<u32>(n0 % c.md.q), c.md.pow(h0, n0 - 1));
    const u32 B = h1 == 0 ? 0 : c.md.mul(static_cast<u32>(n1 % c.md.q), c.md.pow(h1, n1 - 1));
    const u32 C = c.md.sub(s1.top()[static_cast<std::size_t>(depth)],
                           s0.top()[static_cast<std::size_t>(depth)]);

    if (B != 0) {
        // one v per u along the solution line, at this and every deeper level
        if (c.g == 1)
            return u128_pow(c.md.q, c.m - depth + 1);
        const u32 Binv = c.md.inv(B);
        u128 total = 0;
        for (u32 u = 0; u < c.md.q; ++u) {
            const u32 v = c.md.mul(c.md.sub(c.md.mul(A, u), C), Binv);
            total += child(u, v);
        }
        return total;
    }
    // h1 = 0 forces h0 = 0 via the level-0 equation, so A = 0 as well
    if (C != 0)
        return 0;
    if (last && c.g == 1)
        return u128(c.md.q) * c.md.q;
    u128 total = 0;
    for (u32 u = 0; u < c.md.q; ++u)
        for (u32 v = 0; v < c.md.q; ++v)
            total += child(u, v);
    return total;
}

void init_ctx(Ctx& c, const JetSystem& sys, bool local, std::atomic<u64>* ops_total, u64 budget)
{
    c.sys = &sys;
    c.md.q = sys.q;
    c.local = local;
    c.m = sys.m;
    c.g = sys.S.g;
    c.ops_total = ops_total;
    c.budget = budget;

    int nmax = 1;
    for (u64 v : sys.n) {
        if (v > kMaxExponent)
            throw DomainError("count_jets: exponent n_i too large for enumeration");
        nmax = std::max(nmax, static_cast<int>(v));
    }
    c.binom.assign(static_cast<std::size_t>(nmax) + 1,
                   std::vector<u32>(static_cast<std::size_t>(nmax) + 1, 0));
    for (int p = 0; p <= nmax; ++p) {
        c.binom[static_cast<std::size_t>(p)][0] = 1;
        for (int i = 1; i <= p; ++i)
            c.binom[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] =
                c.md.add(c.binom[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(i - 1)],
                         i <= p - 1 ? c.binom[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(i)]
                                    : 0);
    }

    c.roots_for.assign(static_cast<std::size_t>(c.g) + 1, {});
    for (int i = 1; i <= c.g; ++i) {
        auto& lists = c.roots_for[static_cast<std::size_t>(i)];
        lists.assign(sys.q, {});
        for (u32 w = 0; w < sys.q; ++w)
            lists[c.md.pow(w, sys.n[static_cast<std::size_t>(i)])].push_back(w);
    }

    c.t0.resize(static_cast<std::size_t>(c.m) + 2);
    c.t1.resize(static_cast<std::size_t>(c.m) + 2);
    c.t0[0].init(static_cast<int>(sys.n[0]), c.m + 1);
    c.t1[0].init(static_cast<int>(sys.n[1]), c.m + 1);
    c.ti.assign(static_cast<std::size_t>(c.g) + 1, {});
    for (int i = 2; i <= c.g; ++i)
        c.ti[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(c.m) + 2);
    c.rhs.assign(static_cast<std::size_t>(c.g) + 1, {});
    c.point.assign(static_cast<std::size_t>(c.g) + 1, {});
}

Int u128_to_int(u128 v)
{
    Int r = 0;
    Int base = Int(1) << 64;
    r += Int(static_cast<u64>(v >> 64));
    r *= base;
    r += Int(static_cast<u64>(v));
    return r;
}

} // namespace

JetSystem build_jet_system(const SemigroupData& S, long m, std::uint32_t q)
{
    if (m < 0)
        throw DomainError("build_jet_system: m >= 0 required");
    if (q < 2 || q >= (1u << 16) || !is_prime_u32(q))
        throw DomainError("build_jet_system: q must be a prime below 2^16");
    for (int i = 0; i <= S.g; ++i)
        if (divides(Int(q), S.n[i]))
            throw BadCharacteristic("q divides n_" + std::to_string(i));

    JetSystem sys;
    sys.S = S;
    sys.m = m;
    sys.q = q;
    sys.n.resize(static_cast<std::size_t>(S.g) + 1);
    for (int i = 0; i <= S.g; ++i)
        sys.n[static_cast<std::size_t>(i)] = static_cast<u64>(to_long(S.n[i]));
    sys.b.resize(static_cast<std::size_t>(S.g) + 1);
    for (int i = 1; i <= S.g; ++i) {
        sys.b[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i));
        for (int j = 0; j < i; ++j)
            sys.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<u64>(to_long(S.b[i][static_cast<std::size_t>(j)]));
    }
    return sys;
}

std::vector<std::uint32_t> JetSystem::residual(
    int k, const std::vector<std::vector<std::uint32_t>>& point) const
{
    if (k < 1 || k > S.g)
        throw DomainError("residual: k must lie in 1..g");
    Mod md{q};
    u64 ops = 0;
    Series lhs = series_pow(point[static_cast<std::size_t>(k)], n[static_cast<std::size_t>(k)],
                            md, ops);
    Series rhsv(static_cast<std::size_t>(m) + 1, 0);
    rhsv[0] = 1;
    for (int j = 0; j < k; ++j)
        rhsv = series_mul(rhsv, series_pow(point[static_cast<std::size_t>(j)],
                                           b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)],
                                           md, ops),
                          md, ops);
    for (std::size_t l = 0; l < lhs.size(); ++l)
        lhs[l] = md.sub(lhs[l], rhsv[l]);
    return lhs;
}

Int count_jets(const JetSystem& sys, bool local, int threads, std::uint64_t budget)
{
    if (threads < 1)
        throw DomainError("count_jets: threads >= 1 required");
    std::atomic<u64> ops_total{0};

    if (threads == 1) {
        Ctx c;
        init_ctx(c, sys, local, &ops_total, budget);
        return u128_to_int(solve_pair(c, 0));
    }

    // partition the level-0 pairs (level-1 pairs when local) across workers
    struct Seed {
        u32 u0, v0;
        u32 u1, v1;
        bool two_levels;
    };
    std::vector<Seed> seeds;
    {
        Ctx probe;
        init_ctx(probe, sys, local, &ops_total, budget);
        if (local) {
            if (sys.m == 0)
                return count_jets(sys, local, 1, budget);
            for (u32 u = 0; u < sys.q; ++u)
                for (u32 v = 0; v < sys.q; ++v)
                    seeds.push_back(Seed{0, 0, u, v, true});
        } else {
            for (u32 u = 0; u < sys.q; ++u) {
                const u32 w = probe.md.pow(u, sys.n[0]);
                for (u32 v : probe.roots_for[1][w])
                    seeds.push_back(Seed{u, v, 0, 0, false});
            }
            if (sys.m == 0 && sys.S.g == 1)
                return Int(static_cast<long>(seeds.size()));
        }
    }

    std::vector<std::thread> pool;
    std::vector<u128> partial(static_cast<std::size_t>(threads), 0);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                Ctx c;
                init_ctx(c, sys, local, &ops_total, budget);
                u128 acc = 0;
                for (std::size_t si = static_cast<std::size_t>(t); si < seeds.size();
                     si += static_cast<std::size_t>(threads)) {
                    const Seed& sd = seeds[si];
                    u64 ops = 0;
                    c.t0[1] = c.t0[0];
                    c.t0[1].append(sd.u0, 0, c.md, c.binom, ops);
                    c.t1[1] = c.t1[0];
                    c.t1[1].append(sd.v0, 0, c.md, c.binom, ops);
                    long depth = 1;
                    if (sd.two_levels) {
                        if (sys.m == 0)
                            throw DomainError("count_jets: bad seed depth");
                        c.t0[2] = c.t0[1];
                        c.t0[2].append(sd.u1, 1, c.md, c.binom, ops);
                        c.t1[2] = c.t1[1];
                        c.t1[2].append(sd.v1, 1, c.md, c.binom, ops);
                        depth = 2;
                    }
                    c.charge(ops + 1);
                    if (depth <= sys.m)
                        acc += solve_pair(c, depth);
                    else
                        acc += descend_blocks(c);
                }
                partial[static_cast<std::size_t>(t)] = acc;
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);
    u128 total = 0;
    for (u128 p : partial)
        total += p;
    return u128_to_int(total);
}

Int count_jets(const SemigroupData& S, long m, std::uint32_t q, bool local, int threads,
               std::uint64_t budget)
{
    return count_jets(build_jet_system(S, m, q), local, threads, budget);
}

VerifyOutcome verify_class(const SemigroupData& S, long m, std::uint32_t q, bool local,
                           int threads, std::uint64_t budget)
{
    VerifyOutcome out;
    LPoly cls = local ? fiber_class(S, m) : jet_class(S, m);
    Rat expect = cls.eval_rat(Rat(q));
    if (expect.get_den() != 1)
        throw DomainError("verify_class: class value not an integer");
    out.expected = expect.get_num();
    out.count = count_jets(S, m, q, local, threads, budget);
    out.match = out.count == out.expected;
    for (int i = 0; i <= S.g; ++i)
        if (divides(Int(q), S.gens[i]))
            out.q_divides_generator = true;
    return out;
}

} // namespace jetzeta
