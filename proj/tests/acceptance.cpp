// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "jetzeta/cli.hpp"
#include "jetzeta/flatness.hpp"
#include "jetzeta/motivic.hpp"
#include "jetzeta/topo.hpp"
#include "oracles.hpp"

using namespace jetzeta;

namespace {

int failures = 0;

void criterion(int idx, const std::string& name, double limit_s,
               const std::function<bool(std::string&)>& body)
{
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    std::printf("[%2d] %s  %s (%.3fs, limit %.0fs)%s%s\n", idx, ok ? "PASS" : "FAIL",
                name.c_str(), secs, limit_s, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

SemigroupData curve(std::initializer_list<long> v)
{
    return derive_structure(std::vector<Int>(v.begin(), v.end()));
}

QPoly qpoly(std::initializer_list<long> ascending)
{
    QPoly p;
    for (long c : ascending)
        p.emplace_back(c);
    return p;
}

bool check_pairs(const SemigroupData& S, std::vector<std::pair<long, long>> expected)
{
    auto pairs = structural_pairs(S);
    if (pairs.size() != expected.size())
        return false;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].N != expected[i].first || pairs[i].nu != expected[i].second)
            return false;
    return true;
}

bool check_ztop(const SemigroupData& S, const QPoly& num,
                std::vector<std::pair<long, long>> den)
{
    RatQs z = zeta_top(S);
    if (z.num != num || z.den.size() != den.size())
        return false;
    for (std::size_t i = 0; i < den.size(); ++i)
        if (z.den[i].first != den[i].first || z.den[i].second != den[i].second)
            return false;
    return true;
}

/* the printed closed numerator of the (4,6,13) motivic zeta function,
 * already divided by (L-1); degrees 0..31 */
TPoly golden_p1()
{
    TPoly p;
    auto lp = [](std::initializer_list<std::pair<long, long>> terms) {
        LPoly c;
        for (auto [e, v] : terms)
            c += LPoly::monomial(Int(v), e);
        return c;
    };
    p.add_to_coeff(0, lp({{46, 1}, {45, 1}}));
    p.add_to_coeff(1, lp({{43, -1}, {42, -1}}));
    p.add_to_coeff(2, lp({{43, 1}, {42, 1}}));
    p.add_to_coeff(3, lp({{40, -1}}));
    p.add_to_coeff(4, lp({{40, 1}}));
    p.add_to_coeff(5, lp({{38, -1}, {37, -1}}));
    p.add_to_coeff(7, lp({{35, -1}, {34, 1}}));
    p.add_to_coeff(8, lp({{35, 1}, {34, -1}}));
    p.add_to_coeff(9, lp({{32, -1}, {31, 1}}));
    p.add_to_coeff(10, lp({{32, 1}, {31, -1}}));
    p.add_to_coeff(11, lp({{29, -1}, {28, 1}}));
    p.add_to_coeff(12, lp({{29, 1}, {28, -1}}));
    p.add_to_coeff(13, lp({{25, 1}}));
    p.add_to_coeff(14, lp({{25, -1}}));
    p.add_to_coeff(19, lp({{18, -1}}));
    p.add_to_coeff(20, lp({{18, 1}}));
    p.add_to_coeff(21, lp({{15, -1}, {14, 1}}));
    p.add_to_coeff(22, lp({{15, 1}, {14, -1}}));
    p.add_to_coeff(23, lp({{12, -1}, {11, 1}}));
    p.add_to_coeff(24, lp({{12, 1}, {11, -1}}));
    p.add_to_coeff(25, lp({{9, -1}, {8, 1}}));
    p.add_to_coeff(26, lp({{8, -2}}));
    p.add_to_coeff(27, lp({{6, 1}, {5, 1}}));
    p.add_to_coeff(28, lp({{6, -1}, {5, -1}}));
    p.add_to_coeff(29, lp({{3, 1}}));
    p.add_to_coeff(30, lp({{3, -1}}));
    p.add_to_coeff(31, lp({{1, 1}, {0, 1}}));
    return p;
}

bool run_oracle_set(int threads, std::string& d)
{
    SemigroupData S1 = curve({4, 6, 13});
    for (std::uint32_t q : {5u, 7u})
        for (long m = 0; m <= 3; ++m)
            for (bool local : {false, true})
                if (!verify_class(S1, m, q, local, threads).match) {
                    d = "(4,6,13) mismatch";
                    return false;
                }
    SemigroupData S2 = curve({2, 3});
    for (std::uint32_t q : {5u, 7u, 11u})
        for (long m = 0; m <= 6; ++m)
            for (bool local : {false, true})
                if (!verify_class(S2, m, q, local, threads).match) {
                    d = "(2,3) mismatch";
                    return false;
                }
    return true;
}

} // namespace

int main()
{
    criterion(1, "golden values (4,6,13): pairs, lct, topological zeta", 1.0, [](std::string&) {
        SemigroupData S = curve({4, 6, 13});
        return check_pairs(S, {{6, 8}, {26, 37}}) && lct(S) == Rat(4, 3) &&
               check_ztop(S, qpoly({592, 676, 188}), {{2, 1}, {8, 6}, {37, 26}});
    });

    criterion(2, "golden values (8,12,26,53): pairs, topological zeta", 1.0, [](std::string&) {
        SemigroupData S = curve({8, 12, 26, 53});
        return check_pairs(S, {{6, 11}, {26, 50}, {106, 235}}) &&
               check_ztop(S, qpoly({387750, 493578, 206564, 28352}),
                          {{3, 1}, {11, 6}, {50, 26}, {235, 106}});
    });

    criterion(3, "motivic golden test (4,6,13): all 32 printed coefficients", 1.0,
              [](std::string& d) {
                  SemigroupData S = curve({4, 6, 13});
                  ClearedForm cf = cleared_presentation(zeta_motivic(S).total_global);
                  if (cf.shift != 47) {
                      d = "shift " + std::to_string(cf.shift);
                      return false;
                  }
                  if (cf.den != (std::vector<DenomFactor>{{2, 1}, {8, 6}, {37, 26}}))
                      return false;
                  TPoly p1;
                  for (long deg = 0; deg <= cf.num.degree(); ++deg)
                      p1.add_to_coeff(deg, cf.num.coeff(deg).div_exact_L_minus_1());
                  return p1 == golden_p1();
              });

    criterion(4, "series consistency: worked curves and 50 random instances", 30.0,
              [](std::string& d) {
                  if (!series_consistency(curve({4, 6, 13}), 60) ||
                      !series_consistency(curve({8, 12, 26, 53}), 120) ||
                      !series_consistency(curve({2, 3}), 40)) {
                      d = "worked curve failed";
                      return false;
                  }
                  for (const auto& S : testing::random_instances(50, 3, Int(150), 1001)) {
                      long order = 3 * to_long(structural_pairs(S)[0].N);
                      if (!series_consistency(S, std::max<long>(order, 2))) {
                          d = "random instance failed";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(5, "finite-field oracle, single-threaded", 120.0,
              [](std::string& d) { return run_oracle_set(1, d); });

    criterion(5, "finite-field oracle, 8 threads", 30.0,
              [](std::string& d) { return run_oracle_set(8, d); });

    criterion(6, "pole completeness, orders and residue signs on 200 random instances", 10.0,
              [](std::string& d) {
                  for (const auto& S : testing::random_instances(200, 3, Int(150), 2002)) {
                      auto poles = poles_with_residues(S); // throws on residue mismatch
                      if (poles.size() != static_cast<std::size_t>(S.g) + 1) {
                          d = "pole count";
                          return false;
                      }
                      for (const auto& c : poles) {
                          if (c.order != 1 || c.residue == 0)
                              return false;
                          if (c.source == PoleCandidate::Source::Structural) {
                              if (c.index == 1 && !(c.residue > 0))
                                  return false;
                              if (c.index >= 2 && !(c.residue < 0))
                                  return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(7, "lct from jet codimensions on 200 random instances", 5.0, [](std::string&) {
        for (const auto& S : testing::random_instances(200, 3, Int(150), 2002)) {
            auto pairs = structural_pairs(S);
            Rat best(S.g);
            long cap = 3 * to_long(pairs[0].N);
            for (long m = 1; m <= cap; ++m)
                best = std::min(best, make_rat(codim_B(S, m), Int(m + 1)));
            if (best != lct(S))
                return false;
        }
        return true;
    });

    criterion(8, "specialization bridge at eps in {1e-5, 1e-6}", 1.0, [](std::string& d) {
        const std::vector<Rat> samples{Rat(0), Rat(1, 2), Rat(1), Rat(2)};
        for (auto gens : {std::vector<Int>{4, 6, 13}, std::vector<Int>{8, 12, 26, 53}}) {
            SemigroupData S = derive_structure(gens);
            for (double eps : {1e-5, 1e-6}) {
                long double dev = check_specialization(S, eps, samples);
                if (!(dev < 100.0L * static_cast<long double>(eps))) {
                    d = "deviation too large";
                    return false;
                }
            }
            long double d1 = check_specialization(S, 1e-5, samples);
            long double d2 = check_specialization(S, 5e-6, samples);
            if (!(d1 / d2 > 1.6L && d1 / d2 < 2.4L)) {
                d = "no linear contraction";
                return false;
            }
        }
        return true;
    });

    criterion(9, "component catalog of (4,6,13) at m in {5,6,12,13,26}", 1.0, [](std::string& d) {
        SemigroupData S = curve({4, 6, 13});
        auto side = [](const std::vector<ComponentDescriptor>& cs,
                       long k) -> const ComponentDescriptor* {
            for (const auto& c : cs)
                if (c.kind == ComponentDescriptor::Kind::Side && c.k == k)
                    return &c;
            return nullptr;
        };
        auto c5 = components(S, 5);
        if (c5.size() != 1 || c5[0].codim != 8)
            return false;
        auto c6 = components(S, 6);
        if (c6.size() != 1 || c6[0].codim != 10)
            return false;
        auto c12 = components(S, 12);
        if (c12[0].codim != 18 || !side(c12, 1) || side(c12, 1)->codim != 19)
            return false;
        if (side(components(S, 13), 1)) {
            d = "C_1 not emptied at m = 13";
            return false;
        }
        for (const Int& m : {Int(5), Int(6), Int(12), Int(13), Int(26)}) {
            auto cs = components(S, m);
            for (const auto& c : cs)
                if (c.codim < cs[0].codim)
                    return false;
        }
        return true;
    });

    criterion(10, "cusp zeta equals the resolution-formula value", 1.0, [](std::string&) {
        RatQs z = zeta_top(curve({2, 3}));
        if (!(z.num == qpoly({5, 4})))
            return false;
        if (z.den != (std::vector<std::pair<Int, Int>>{{Int(1), Int(1)}, {Int(5), Int(6)}}))
            return false;
        const Rat expected[] = {Rat(1), Rat(9, 22), Rat(13, 51)};
        for (long s = 0; s <= 2; ++s) {
            if (zeta_top_eval(z, Rat(s)) != testing::cusp_resolution_zeta_at(Rat(s)))
                return false;
            if (zeta_top_eval(z, Rat(s)) != expected[s])
                return false;
        }
        return true;
    });

    criterion(11, "non-flatness thresholds", 1.0, [](std::string&) {
        if (non_flat_threshold(curve({4, 6, 13})).m0 != 36)
            return false;
        if (non_flat_threshold(curve({8, 12, 26, 53})).verdict !=
            FlatnessReport::Verdict::NotFlatForAllM)
            return false;
        for (const auto& S : testing::random_instances(3, 3, Int(150), 3003))
            if (S.g == 3 &&
                non_flat_threshold(S).verdict != FlatnessReport::Verdict::NotFlatForAllM)
                return false;
        return non_flat_threshold(curve({2, 3})).verdict ==
               FlatnessReport::Verdict::HypersurfaceFlat;
    });

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
