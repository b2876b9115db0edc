#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ccs/floer_rank/surgery_rank.hpp"
#include "ccs/floer_rank/thin_complex.hpp"
#include "ccs/knot_model/diagram.hpp"
#include "ccs/skein_engine/alexander.hpp"
#include "ccs/skein_engine/seifert.hpp"

using namespace ccs;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<long long, long long>> ts) {
    LaurentPoly p;
    for (auto [e, c] : ts) p.add_term(e, c);
    return p;
}

std::vector<Int> ints(std::initializer_list<long long> vs) {
    return std::vector<Int>(vs.begin(), vs.end());
}

}  // namespace

TEST_CASE("excess rank from determinant and tau") {
    REQUIRE(ck_thin(Int(3), 1) == 0);    // trefoil
    REQUIRE(ck_thin(Int(11), 1) == 4);   // 6_2 pattern
    REQUIRE(ck_thin(Int(1), 0) == 0);    // unknot
    REQUIRE(ck_thin(Int(5), 0) == 2);    // figure eight
    REQUIRE(ck_thin(Int(5), 2) == 0);    // (2,5) torus knot
    REQUIRE(ck_thin(Int(7), 1) == 2);
    REQUIRE(ck_thin(Int(9), 0) == 4);
    REQUIRE(ck_thin(Int(13), 0) == 6);
    REQUIRE(ck_thin(Int(17), 0) == 8);
    REQUIRE(ck_thin(Int(17), 2) == 6);

    REQUIRE_THROWS_AS(ck_thin(Int(4), 0), NotThinConsistent);    // even det
    REQUIRE_THROWS_AS(ck_thin(Int(0), 0), NotThinConsistent);
    REQUIRE_THROWS_AS(ck_thin(Int(-3), 1), NotThinConsistent);
    REQUIRE_THROWS_AS(ck_thin(Int(3), 2), NotThinConsistent);    // det < 2|tau|+1
    REQUIRE_THROWS_AS(ck_thin(Int(7), 0), NotThinConsistent);    // odd excess
    REQUIRE_THROWS_AS(ck_thin(Int(3), -1), NotThinConsistent);
}

TEST_CASE("square counts solve the thin system") {
    SECTION("6_2 pattern: d = (3,3,1), tau = 1") {
        auto m = solve_delta_system(ints({3, 3, 1}), 1);
        REQUIRE(m.g == 2);
        REQUIRE(m.delta == ints({0, 1}));
        REQUIRE(m.epsilon == std::vector<int>{1, 1, 0});
        REQUIRE(m.c_k() == 4);
        REQUIRE(m.c_k() == ck_thin(Int(11), 1));
    }
    SECTION("trefoil: d = (1,1), tau = 1") {
        auto m = solve_delta_system(ints({1, 1}), 1);
        REQUIRE(m.delta == ints({0}));
        REQUIRE(m.c_k() == 0);
    }
    SECTION("figure eight: d = (3,1), tau = 0") {
        auto m = solve_delta_system(ints({3, 1}), 0);
        REQUIRE(m.delta == ints({1}));
        REQUIRE(m.c_k() == 2);
        REQUIRE(m.c_k() == ck_thin(Int(5), 0));
    }
    SECTION("genus two, tau 0: d = (5,4,2)") {
        auto m = solve_delta_system(ints({5, 4, 2}), 0);
        REQUIRE(m.delta == ints({0, 2}));
        REQUIRE(m.c_k() == 8);
        REQUIRE(m.c_k() == ck_thin(Int(17), 0));
    }
    SECTION("genus three, tau 2: d = (3,3,3,1)") {
        auto m = solve_delta_system(ints({3, 3, 3, 1}), 2);
        REQUIRE(m.delta == ints({1, 0, 1}));
        REQUIRE(m.c_k() == 6);
        REQUIRE(m.c_k() == ck_thin(Int(17), 2));
    }
    SECTION("bad inputs") {
        REQUIRE_THROWS_AS(solve_delta_system(ints({1}), 0), InconsistentSystem);
        REQUIRE_THROWS_AS(solve_delta_system(ints({1, 1}), 2), InconsistentSystem);
        REQUIRE_THROWS_AS(solve_delta_system(ints({1, 2}), 0), InconsistentSystem);
        REQUIRE_THROWS_AS(solve_delta_system(ints({1, 0, 1}), 0),
                          InconsistentSystem);
        REQUIRE_THROWS_AS(solve_delta_system(ints({3, 1, 0}), 0),
                          InconsistentSystem);
        REQUIRE_THROWS_AS(solve_delta_system(ints({3, -1}), 0),
                          InconsistentSystem);
    }
}

TEST_CASE("alternating coefficient extraction") {
    REQUIRE(alternating_abs_coeffs(lp({{-2, 1}, {0, -1}, {2, 1}})) ==
            ints({1, 1}));
    REQUIRE(alternating_abs_coeffs(lp({{-2, -1}, {0, 3}, {2, -1}})) ==
            ints({3, 1}));
    REQUIRE(alternating_abs_coeffs(
                lp({{-4, -1}, {-2, 3}, {0, -3}, {2, 3}, {4, -1}})) ==
            ints({3, 3, 1}));
    // interior zero is fine as long as the non-zero signs stay consistent
    REQUIRE(alternating_abs_coeffs(lp({{-4, 1}, {0, 1}, {4, 1}})) ==
            ints({1, 0, 1}));
    REQUIRE(alternating_abs_coeffs(lp({{0, 1}})) == ints({1}));

    // T(3,4): d_0 and d_2 are both positive, so the pattern breaks
    REQUIRE_THROWS_AS(alternating_abs_coeffs(
                          lp({{-6, 1}, {-4, -1}, {0, 1}, {4, -1}, {6, 1}})),
                      NotThinConsistent);
    REQUIRE_THROWS_AS(alternating_abs_coeffs(lp({{-2, 1}, {0, 1}, {2, 1}})),
                      NotThinConsistent);
    REQUIRE_THROWS_AS(alternating_abs_coeffs(lp({{-2, 1}, {0, -1}, {2, 2}})),
                      NotThinConsistent);  // not palindromic
    REQUIRE_THROWS_AS(alternating_abs_coeffs(lp({{1, 1}})), NotThinConsistent);
    REQUIRE_THROWS_AS(alternating_abs_coeffs(LaurentPoly()), NotThinConsistent);
}

TEST_CASE("rank profile validation") {
    REQUIRE_NOTHROW(RankProfile(1, 0, 1));  // trefoil
    REQUIRE_NOTHROW(RankProfile(0, 2, 1));  // figure eight
    REQUIRE_NOTHROW(RankProfile(1, 2, 1));
    REQUIRE_NOTHROW(RankProfile(2, 0, 2));  // (2,5) torus knot
    REQUIRE_NOTHROW(RankProfile(1, 4, 2));
    REQUIRE_NOTHROW(RankProfile(0, 4, 3));
    REQUIRE_NOTHROW(RankProfile(3, 6, 3));

    REQUIRE_THROWS_AS(RankProfile(0, 2, 0), InvalidRankProfile);   // genus 0
    REQUIRE_THROWS_AS(RankProfile(-1, 2, 1), InvalidRankProfile);
    REQUIRE_THROWS_AS(RankProfile(2, 2, 1), InvalidRankProfile);   // nu > g
    REQUIRE_THROWS_AS(RankProfile(1, 1, 1), InvalidRankProfile);   // odd
    REQUIRE_THROWS_AS(RankProfile(1, -2, 1), InvalidRankProfile);
    REQUIRE_THROWS_AS(RankProfile(1, 0, 2), InvalidRankProfile);   // c=0, nu<g
    REQUIRE_THROWS_AS(RankProfile(0, 2, 2), InvalidRankProfile);   // needs >= 4

    REQUIRE(RankProfile::normalized(0, 1, 2, 1) == RankProfile(1, 2, 1));
    REQUIRE(RankProfile::normalized(1, 0, 0, 1) == RankProfile(1, 0, 1));
    REQUIRE(RankProfile::normalized(2, 1, 6, 3) == RankProfile(2, 6, 3));
}

TEST_CASE("surgery rank values") {
    RankProfile trefoil(1, 0, 1);
    REQUIRE(hf_rank(trefoil, Slope(7, 2)) == 7);   // above 2nu-1
    REQUIRE(hf_rank(trefoil, Slope(1, 2)) == 3);   // below 2nu-1
    REQUIRE(hf_rank(trefoil, Slope(1, 1)) == 1);   // at the boundary

    RankProfile fig8(0, 2, 1);
    REQUIRE(hf_rank(fig8, Slope(5, -1)) == 7);     // negative slope, nu = 0
    REQUIRE(hf_rank(fig8, Slope(7, 3)) == 13);
    REQUIRE(hf_rank(fig8, Slope(7, -3)) == 13);

    RankProfile p52(1, 2, 1);
    REQUIRE(hf_rank(p52, Slope(3, 1)) == 5);
    REQUIRE(hf_rank(p52, Slope(1, 2)) == 7);
    REQUIRE(hf_rank(p52, Slope(3, -1)) == 7);      // negative slope, nu > 0

    RankProfile t25(2, 0, 2);
    REQUIRE(hf_rank(t25, Slope(3, 1)) == 3);       // lens-space surgery
    REQUIRE(hf_rank(t25, Slope(1, 1)) == 5);
    REQUIRE(hf_rank(t25, Slope(7, -2)) == 19);
}

TEST_CASE("rank formula is continuous at the branch point") {
    for (int nu = 1; nu <= 5; ++nu)
        for (int ck : {0, 2, 4, 6})
            for (long long n = 1; n <= 10; ++n) {
                RankProfile p(nu, ck, nu);  // nu = genus is always realizable
                long long m = (2LL * nu - 1) * n;
                long long high = m + n * ck;
                long long low = -m + (4LL * nu - 2) * n + n * ck;
                REQUIRE(high == low);
                long long g = std::gcd(m, n);
                REQUIRE(hf_rank(p, Slope(m / g, n / g)) == high / g);
            }
}

TEST_CASE("rank is always positive") {
    for (int nu = 0; nu <= 5; ++nu)
        for (int ck : {0, 2, 4, 6})
            for (int g = std::max(nu, 1); g <= 6; ++g) {
                std::optional<RankProfile> p;
                try {
                    p.emplace(nu, ck, g);
                } catch (const InvalidRankProfile&) {
                    continue;
                }
                for (long long m = 1; m <= 15; ++m)
                    for (long long n = -8; n <= 8; ++n) {
                        if (n == 0 || std::gcd(m, n < 0 ? -n : n) != 1) continue;
                        REQUIRE(hf_rank(*p, Slope(m, n)) >= 1);
                    }
            }
}

TEST_CASE("exact-negative slopes have equal rank exactly when nu vanishes") {
    RankProfile nu0(0, 4, 2);
    RankProfile nu1(1, 2, 1);
    for (long long m = 1; m <= 12; ++m)
        for (long long n = 1; n <= 9; ++n) {
            if (std::gcd(m, n) != 1) continue;
            REQUIRE(hf_rank(nu0, Slope(m, n)) == hf_rank(nu0, Slope(m, -n)));
            REQUIRE(hf_rank(nu1, Slope(m, n)) != hf_rank(nu1, Slope(m, -n)));
        }
}

TEST_CASE("slope pair constraint regions") {
    SECTION("trefoil profile") {
        auto c = slope_pair_constraints(RankProfile(1, 0, 1));
        REQUIRE(c.plus_possible);
        REQUIRE(c.plus_min_slope == 1);
        REQUIRE_FALSE(c.minus_forces_zero_sum);
        REQUIRE(c.minus_small_ratio == Rational(1));
        REQUIRE_FALSE(c.minus_large_possible);
        REQUIRE(c.sum_ratio_bound == Rational(2));
        REQUIRE(c.genus_one_lspace);
    }
    SECTION("figure-eight profile") {
        auto c = slope_pair_constraints(RankProfile(0, 2, 1));
        REQUIRE_FALSE(c.plus_possible);
        REQUIRE(c.minus_forces_zero_sum);
        REQUIRE_FALSE(c.minus_small_ratio.has_value());
        REQUIRE_FALSE(c.minus_large_possible);
        REQUIRE(c.sum_ratio_bound == Rational(1));
        REQUIRE_FALSE(c.genus_one_lspace);
    }
    SECTION("excess rank four bounds the ratio by one half") {
        auto c = slope_pair_constraints(RankProfile(1, 4, 1));
        REQUIRE(c.sum_ratio_bound == Rational(Int(1), Int(2)));
        REQUIRE(c.minus_small_ratio == Rational(Int(1), Int(3)));
        REQUIRE(c.minus_large_possible);
    }
    SECTION("genus two fibered profile") {
        auto c = slope_pair_constraints(RankProfile(2, 0, 2));
        REQUIRE(c.plus_possible);
        REQUIRE(c.plus_min_slope == 3);
        REQUIRE(c.sum_ratio_bound == Rational(Int(2), Int(3)));
        REQUIRE_FALSE(c.genus_one_lspace);
    }
}

TEST_CASE("pair admissibility") {
    auto pair_of = [](long long m1, long long n1, long long m2, long long n2) {
        return SlopePair(Slope(m1, n1), Slope(m2, n2));
    };

    SECTION("trefoil: only the classified family survives") {
        auto c = slope_pair_constraints(RankProfile(1, 0, 1));
        REQUIRE(c.admissible(pair_of(9, 2, 9, 1)));        // s = 1
        REQUIRE(c.admissible(pair_of(27, 5, 27, 4)));      // s = 3
        REQUIRE(c.admissible(pair_of(45, 8, 45, 7)));      // s = 5
        // rank-equal pairs outside the family are rejected
        REQUIRE_FALSE(c.admissible(pair_of(5, 1, 5, 4)));
        REQUIRE_FALSE(c.admissible(pair_of(18, 5, 18, 1)));  // even s
        REQUIRE_FALSE(c.admissible(pair_of(27, 4, 27, 2)));
        REQUIRE_FALSE(c.admissible(pair_of(5, 7, 5, -2)));   // ratio-one pair
        REQUIRE_FALSE(c.admissible(pair_of(9, 2, 9, 2)));    // same slope
        REQUIRE_FALSE(c.admissible(pair_of(9, 2, 7, 1)));    // homology differs
    }
    SECTION("nu = 0: exact negatives only") {
        auto c = slope_pair_constraints(RankProfile(0, 2, 1));
        REQUIRE(c.admissible(pair_of(5, 1, 5, -1)));
        REQUIRE(c.admissible(pair_of(5, 2, 5, -2)));
        REQUIRE_FALSE(c.admissible(pair_of(5, 1, 5, -2)));
        REQUIRE_FALSE(c.admissible(pair_of(7, 2, 7, -3)));
    }
    SECTION("nu = 1 with excess rank two") {
        auto c = slope_pair_constraints(RankProfile(1, 2, 1));
        // low-branch pair: (n+n')/m = 1/2
        REQUIRE(c.admissible(pair_of(4, 5, 4, -3)));
        REQUIRE(*c.minus_small_ratio == Rational(Int(1), Int(2)));
        // high-branch pair: (n+n') c_k = (4nu-2)(-n')
        REQUIRE(c.admissible(pair_of(3, 2, 3, -1)));
        // same-sign pairs need vanishing excess rank
        REQUIRE_FALSE(c.admissible(pair_of(5, 1, 5, 3)));
        REQUIRE_FALSE(c.admissible(pair_of(7, 1, 7, 2)));
    }
    SECTION("plus-type pair for a genus-two profile") {
        auto c = slope_pair_constraints(RankProfile(2, 0, 2));
        REQUIRE(c.admissible(pair_of(7, 1, 7, 2)));   // both slopes >= 3
        REQUIRE_FALSE(c.admissible(pair_of(7, 2, 7, 3)));  // 7/3 < 3
    }
}

TEST_CASE("no admissible pair reaches the homology-sphere line") {
    long long admitted = 0, plus_seen = 0, minus_seen = 0, zero_seen = 0;
    long long violations = 0;

    for (int nu = 0; nu <= 5; ++nu) {
        for (int ck : {0, 2, 4, 6}) {
            for (int g = std::max(nu, 1); g <= 6; ++g) {
                std::optional<RankProfile> p;
                try {
                    p.emplace(nu, ck, g);
                } catch (const InvalidRankProfile&) {
                    continue;
                }
                auto cons = slope_pair_constraints(*p);

                for (long long m = 1; m <= 40; ++m) {
                    std::vector<Slope> slopes;
                    for (long long n = -60; n <= 60; ++n) {
                        if (n == 0 || std::gcd(m, n < 0 ? -n : n) != 1) continue;
                        slopes.emplace_back(m, n);
                    }
                    for (size_t i = 0; i < slopes.size(); ++i) {
                        for (size_t j = i + 1; j < slopes.size(); ++j) {
                            SlopePair pr(slopes[i], slopes[j]);
                            if (!cons.admissible(pr)) continue;
                            ++admitted;
                            const long long sum =
                                slopes[i].n() + slopes[j].n();
                            const long long asum = sum < 0 ? -sum : sum;

                            // strict homology-sphere bound |n+n'| < m
                            if (asum >= m) ++violations;
                            // strict rank bound |(n+n')/m| < 2/(2g-1) or 2/c
                            if (!(Rational(Int(asum), Int(m)) <
                                  cons.sum_ratio_bound))
                                ++violations;

                            switch (pr.type_tag) {
                                case PairType::zero_type:
                                    ++zero_seen;
                                    if (sum != 0) ++violations;
                                    break;
                                case PairType::plus_type: {
                                    ++plus_seen;
                                    if (m <= 2) ++violations;
                                    if (!cons.plus_possible) ++violations;
                                    Rational lo(Int(cons.plus_min_slope));
                                    if (slopes[i].value() < lo ||
                                        slopes[j].value() < lo)
                                        ++violations;
                                    break;
                                }
                                case PairType::minus_type: {
                                    ++minus_seen;
                                    if (m <= 2) ++violations;
                                    if (cons.minus_forces_zero_sum)
                                        ++violations;
                                    // one of the two branch equalities holds
                                    const Slope& neg = slopes[i].n() < 0
                                                           ? slopes[i]
                                                           : slopes[j];
                                    bool low =
                                        sum * (4LL * nu - 2 + ck) == 2 * m;
                                    bool high = sum * ck ==
                                                (4LL * nu - 2) * (-neg.n());
                                    if (!low && !high) ++violations;
                                    break;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    REQUIRE(violations == 0);
    REQUIRE(admitted > 0);
    REQUIRE(plus_seen > 0);
    REQUIRE(minus_seen > 0);
    REQUIRE(zero_seen > 0);
}

TEST_CASE("two routes to the excess rank agree on thin diagrams") {
    struct Row {
        const char* pd;
        int sigma_abs;
        long long c_expected;
    };
    // alternating diagrams from the shared corpus, |sigma| as computed from
    // the symmetrized Seifert form, expected excess rank
    const std::vector<Row> rows = {
        {"PD[X(6,4,1,3),X(2,6,3,5),X(4,2,5,1)]", 2, 0},
        {"PD[X(8,3,1,4),X(2,6,3,5),X(4,7,5,8),X(6,2,7,1)]", 0, 2},
        {"PD[X(10,6,1,5),X(4,10,5,9),X(8,4,9,3),X(2,8,3,7),X(6,2,7,1)]", 4, 0},
        {"PD[X(10,3,1,4),X(2,7,3,8),X(4,9,5,10),X(6,1,7,2),X(8,5,9,6)]", 2, 2},
        {"PD[X(12,3,1,4),X(2,8,3,7),X(4,11,5,12),X(6,9,7,10),X(8,2,9,1),"
         "X(10,5,11,6)]",
         0, 4},
        {"PD[X(12,3,1,4),X(2,8,3,7),X(4,9,5,10),X(6,11,7,12),X(8,2,9,1),"
         "X(10,5,11,6)]",
         2, 4},
        {"PD[X(12,3,1,4),X(2,7,3,8),X(4,10,5,9),X(6,1,7,2),X(8,12,9,11),"
         "X(10,6,11,5)]",
         0, 6},
        {"PD[X(14,3,1,4),X(2,9,3,10),X(4,11,5,12),X(6,13,7,14),X(8,1,9,2),"
         "X(10,7,11,8),X(12,5,13,6)]",
         4, 6},
        {"PD[X(16,3,1,4),X(2,10,3,9),X(4,11,5,12),X(6,13,7,14),X(8,15,9,16),"
         "X(10,2,11,1),X(12,5,13,6),X(14,7,15,8)]",
         4, 6},
        {"PD[X(5,1,6,12),X(11,7,12,6),X(1,10,2,11),X(9,2,10,3),X(3,8,4,9),"
         "X(7,4,8,5)]",
         0, 4},
        {"PD[X(5,10,6,1),X(9,4,10,5),X(1,8,2,9),X(7,2,8,3),X(3,6,4,7)]", 2, 2},
    };

    for (const Row& r : rows) {
        INFO(r.pd);
        auto sm = seifert_matrix(parse_pd(r.pd));
        auto ac = alexander_conway(sm);
        int sigma = form_signature(sm);
        REQUIRE(std::abs(sigma) == r.sigma_abs);
        REQUIRE(r.sigma_abs % 2 == 0);
        int tau_abs = r.sigma_abs / 2;

        Rational at_minus1 = ac.delta.eval(Int(-1));
        REQUIRE(at_minus1.is_integer());
        Int det = abs(at_minus1.num());

        Int direct = ck_thin(det, tau_abs);
        if (ac.delta == lp({{0, 1}})) continue;  // degree-zero polynomial
        auto model = solve_delta_system(alternating_abs_coeffs(ac.delta),
                                        tau_abs);
        REQUIRE(model.c_k() == direct);
        REQUIRE(model.c_k() == r.c_expected);
    }
}

TEST_CASE("a non-thin diagram is rejected by both routes") {
    // T(3,4): determinant 3 but |sigma| = 6, and coefficient signs that do
    // not alternate
    const char* pd =
        "PD[X(16,3,1,4),X(2,7,3,8),X(11,4,12,5),X(6,1,7,2),X(13,8,14,9),"
        "X(15,10,16,11),X(5,12,6,13),X(9,14,10,15)]";
    auto sm = seifert_matrix(parse_pd(pd));
    auto ac = alexander_conway(sm);
    int sigma = form_signature(sm);
    REQUIRE(std::abs(sigma) == 6);
    REQUIRE_THROWS_AS(alternating_abs_coeffs(ac.delta), NotThinConsistent);
    REQUIRE_THROWS_AS(ck_thin(Int(3), std::abs(sigma) / 2), NotThinConsistent);
}
