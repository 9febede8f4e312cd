#include <doctest.h>

#include <algorithm>

#include "fuscat/center_obstruction.hpp"
#include "fuscat/errors.hpp"
#include "fuscat/numtheory.hpp"

using namespace fuscat;

TEST_CASE("dimension data") {
    K1DimensionData d6 = k1_dimension_data(6);
    CHECK(d6.delta == QuadVal(Rat(3), Rat(2), Int(3)));
    CHECK(d6.dim_total == QuadVal(Rat(24), Rat(12), Int(3)));
    CHECK(d6.k == 2);

    K1DimensionData d2 = k1_dimension_data(2);
    CHECK(d2.special_case_e2);
    CHECK(d2.delta == QuadVal(3));
    CHECK(d2.dim_total == QuadVal(12));

    CHECK(!k1_dimension_data(4).integrality_ok);
}

TEST_CASE("k1 branchings") {
    auto b0 = k1_branchings(0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].gamma_sq_sum == 6);
    CHECK(b0[0].c_sf == 3);
    CHECK(b0[0].m == 2);

    auto b2 = k1_branchings(2);
    REQUIRE(b2.size() == 3);
    std::vector<long long> sums;
    for (const auto& d : b2) sums.push_back(d.gamma_sq_sum);
    std::sort(sums.begin(), sums.end());
    CHECK(sums == std::vector<long long>{18, 18, 22});

    auto b1 = k1_branchings(1);
    CHECK(b1[0].c_sf == 21);
    CHECK(b1[0].c_sf % 3 == 0);
    CHECK(gcd(b1[0].c_sf, Int(10)) == 1);

    // dimension bookkeeping: 1 + dim A + dim B + dim C = dim
    for (long long k = 0; k <= 20; ++k) {
        K1DimensionData dd = k1_dimension_data(3 * k);
        for (const K1CenterData& d : k1_branchings(k)) {
            QuadVal total = QuadVal(1) + d.dims.at("A") + d.dims.at("B") + d.dims.at("C");
            CHECK(total == dd.dim_total);
            CHECK(d.gamma_sq_sum == 6 + 5 * k * k - 2 * (d.r * d.r + d.p * d.p));
        }
    }
}

TEST_CASE("squarefree parts obey the divisibility lemma") {
    for (long long k = 0; k <= 20; ++k) {
        auto [c, m] = squarefree_part(make_int(9 * k * k + 12));
        CHECK(c % 3 == 0);
        CHECK(gcd(c, Int(10)) == 1);
        CHECK(Int(c * m * m) == make_int(9 * k * k + 12));
    }
}

TEST_CASE("twist targets") {
    auto branchings = k1_branchings(3);
    const K1CenterData* pick = nullptr;
    for (const auto& d : branchings)
        if (d.r == 1 && d.p == 2) pick = &d;
    REQUIRE(pick != nullptr);
    PairedTargets t = k1_twist_targets(*pick, +1);
    CHECK(t.budget == 12 + 54 + 16);
    CHECK(t.sum_target == QuadVal(Rat(-8), Rat(-3), Int(93)));
    CHECK(t.sumsq_target == QuadVal(Rat(-8), Rat(-1), Int(93)));
    CHECK(t.d_nonneg);

    PairedTargets tminus = k1_twist_targets(*pick, -1);
    CHECK(tminus.sumsq_target == QuadVal(Rat(-8), Rat(-5), Int(93)));

    auto b0 = k1_branchings(0);
    PairedTargets t0 = k1_twist_targets(b0[0], +1);
    CHECK(t0.budget == 12);
    CHECK(t0.sum_target == QuadVal(0));  // k = 0, rp = 0
    CHECK(!t0.d_nonneg);                 // d = -2m < 0

    // rp = 0 kills the rational part
    for (const auto& d : k1_branchings(4))
        if (d.r == 0 || d.p == 0) CHECK(k1_twist_targets(d, +1).sum_target.a() == 0);
}

TEST_CASE("k1 feasibility matches the survivor list") {
    CHECK(k1_feasible(0).feasible());
    CHECK(k1_feasible(2).verdict == Feasibility::FeasibleKnown);
    CHECK(k1_feasible(3).feasible());
    CHECK(k1_feasible(6).feasible());
    CHECK(!k1_feasible(1).feasible());
    CHECK(!k1_feasible(4).feasible());

    ParamVerdict e9 = k1_feasible(9);
    CHECK(!e9.feasible());
    CHECK(e9.exact.at("c_sf") == "93");
    CHECK(e9.case_label.find("c >= 33") != std::string::npos);

    ParamVerdict e12 = k1_feasible(12);
    CHECK(!e12.feasible());
    CHECK(e12.exact.at("c_sf") == "39");

    ScanReport rep = scan_family('1', 60, 2);
    CHECK(rep.survivors == std::vector<long long>{0, 2, 3, 6});
}

TEST_CASE("rejection inequality holds along the c = 3 ladder") {
    // where 3k^2 + 4 is a perfect square the bound is integral; in general
    // compare (12 + 6k^2)^2 against (5k - 4)^2 (3k^2 + 4)
    for (long long k = 4; k <= 100; ++k) {
        Int lhs = make_int(12 + 6 * k * k) * make_int(12 + 6 * k * k);
        Int rhs = make_int(5 * k - 4) * make_int(5 * k - 4) * make_int(3 * k * k + 4);
        CHECK(lhs < rhs);
    }
}

TEST_CASE("phi ratio bound") {
    PhiRatioCheck eq = phi_ratio_bound(Int(33));
    CHECK(eq.holds);
    CHECK(eq.lhs == eq.rhs);
    PhiRatioCheck c39 = phi_ratio_bound(Int(39));
    CHECK(c39.holds);
    CHECK(c39.lhs == Int(24) * 24 * 33);
    CHECK(c39.rhs == Int(20) * 20 * 39);
    CHECK_THROWS_AS(phi_ratio_bound(Int(15)), HypothesisViolation);
    CHECK(phi_ratio_bound(Int(21), 21).holds);
}

TEST_CASE("k2 branchings") {
    auto b0 = k2_branchings(0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].gamma_sq_sum == 4);
    CHECK(b0[0].gamma_cross_sum == 0);

    auto b1 = k2_branchings(1);
    CHECK(!b1.empty());
    for (const auto& d : b1) CHECK(d.gamma_sq_sum + d.gamma_cross_sum <= 7);

    bool saw_g0h2 = false;
    for (const auto& d : k2_branchings(2))
        if (d.g == 0 && d.h == 2) saw_g0h2 = true;
    CHECK(saw_g0h2);

    // the pair-sum bound re-derived from the enumerated identities
    for (long long c = 0; c <= 6; ++c) {
        for (const auto& d : k2_branchings(c)) {
            long long pair_sq = 0, pair_lin = 0;
            for (int i = 0; i < 4; ++i) {
                long long s = d.jlnq[i] + d.kmpr[i];
                pair_sq += s * s;
                pair_lin += s;
            }
            CHECK(pair_lin == 4 * c);
            CHECK(2 * (d.gamma_sq_sum + d.gamma_cross_sum) == 8 + 10 * c * c - pair_sq);
            CHECK(d.gamma_sq_sum + d.gamma_cross_sum <= d.pair_sum_bound);
        }
    }
}

TEST_CASE("k2 feasibility matches the survivor list") {
    CHECK(k2_feasible(0).verdict == Feasibility::FeasibleKnown);
    ParamVerdict c1 = k2_feasible(1);
    CHECK(c1.feasible());
    CHECK(c1.case_label.find("a perfect square") != std::string::npos);
    ParamVerdict c2 = k2_feasible(2);
    CHECK(c2.feasible());
    CHECK(c2.case_label.find("not a perfect square") != std::string::npos);
    CHECK(!k2_feasible(3).feasible());
    ParamVerdict c7 = k2_feasible(7);
    CHECK(!c7.feasible());
    CHECK(c7.exact.at("half_is_square") == "yes");

    ScanReport rep = scan_family('2', 40, 2);
    CHECK(rep.survivors == std::vector<long long>{0, 1, 2});
}

TEST_CASE("forced twist identities") {
    TwistCheckReport k1 = twist_identity_checks('1', 3);
    CHECK(k1.dim_trace_forced);
    CHECK(k1.theta_d_unique);
    CHECK(k1.alpha_r_p_forced);

    TwistCheckReport k1b = twist_identity_checks('1', 18);
    CHECK(k1b.alpha_r_p_forced);

    TwistCheckReport k2 = twist_identity_checks('2', 2);
    CHECK(k2.dim_trace_forced);
    CHECK(k2.k2_sign_paired);
    CHECK(k2.k2_double_d_rejected);
}
