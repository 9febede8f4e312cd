#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "fuscat/codegree_obstruction.hpp"
#include "fuscat/errors.hpp"

using namespace fuscat;

TEST_CASE("gamma is a double root with the predicted value") {
    QuarticFactorization f = gamma_double_root_check(RParams{0, 1, 1, -6});
    CHECK(f.gamma == 3);
    QuarticFactorization g = gamma_double_root_check(RParams{-1, 0, -1, -4});
    CHECK(g.gamma == 4);

    // e = 0: codegrees {3, 3, 6, 6}
    QuarticFactorization h = gamma_double_root_check(RParams{0, 1, 1, 0});
    CHECK(h.gamma == 3);
    CHECK(h.quadratic_real);
    CHECK(h.quadratic_roots.first == QuadVal(6));
    CHECK(h.quadratic_roots.second == QuadVal(6));
}

TEST_CASE("pseudo-unitarity gates") {
    CodegreeSet table1 = formal_codegrees(fuscat::testing::table1_ring());
    GateVerdict v = ostrik_gates(table1);
    CHECK(v.all_positive);
    CHECK(v.recip_sum_one);
    CHECK(!v.recip_sq_bound);
    // lhs = 55/96, rhs = (33 - 5 sqrt 3)/48, checked in Q(sqrt 3)
    CHECK(v.recip_sq_sum == QuadVal(make_rat(55, 96)));
    CHECK(v.recip_sq_limit == QuadVal(make_rat(33, 48), make_rat(-5, 48), Int(3)));

    CodegreeSet four{{QuadVal(4), QuadVal(4), QuadVal(4), QuadVal(4)}, IntPoly()};
    GateVerdict v4 = ostrik_gates(four);
    CHECK(v4.pass());
    CHECK(v4.recip_sq_sum == QuadVal(make_rat(1, 4)));

    CodegreeSet mixed{{QuadVal(6), QuadVal(6), QuadVal(6), QuadVal(2)}, IntPoly()};
    GateVerdict vm = ostrik_gates(mixed);
    CHECK(vm.recip_sum_one);
    CHECK(vm.recip_sq_bound);  // 1/3 <= 7/12
    CHECK(vm.recip_sq_sum == QuadVal(make_rat(1, 3)));
}

TEST_CASE("gamma bound lemma") {
    // identity -alpha/beta = 2/gamma - 1 realized with beta >= gamma^2
    auto mk = [](long gamma, long scale) {
        QuarticFactorization f;
        f.gamma = gamma;
        f.alpha = (gamma - 2) * scale;
        f.beta = gamma * scale;
        f.quadratic_real = true;
        return f;
    };
    CHECK(gamma_bound(mk(3, 9)).pass);         // beta = 27 >= 9
    CHECK(gamma_bound(mk(3, 9)).recip_identity);
    CHECK(!gamma_bound(mk(8, 64)).pass);       // gamma = 8 excluded
    CHECK(!gamma_bound(mk(2, 4)).pass);        // gamma = 2 excluded
    CHECK_THROWS_AS(gamma_bound(mk(5, 1)), HypothesisViolation);  // beta < gamma^2
}

TEST_CASE("admissible integer codegree quadruples") {
    auto tuples = integer_codegree_tuples();
    std::vector<std::array<long, 4>> expected = {
        {12, 12, 3, 2}, {8, 8, 4, 2}, {10, 5, 5, 2}, {6, 6, 6, 2},
        {6, 6, 3, 3},   {6, 4, 4, 3}, {12, 4, 3, 3}, {4, 4, 4, 4}};
    std::sort(expected.begin(), expected.end());
    CHECK(tuples == expected);
    CHECK(tuples.size() == 8);
}

TEST_CASE("the gamma = 8 determinant scan") {
    Gamma8Report rep = gamma8_exclusion(9);
    CHECK(rep.excluded);
    CHECK(rep.det_at_g0 == 512);
    bool saw_g1 = false, saw_gm1 = false;
    for (const Gamma8Evidence& e : rep.scan) {
        CHECK(e.det_a > 512);
        if (e.x == 1 && e.y == 2 && e.g == 1) {
            CHECK(e.det_a == 6144);
            saw_g1 = true;
        }
        if (e.x == 1 && e.y == 2 && e.g == -1) {
            CHECK(e.det_a == 4096);
            saw_gm1 = true;
        }
    }
    CHECK(saw_g1);
    CHECK(saw_gm1);
}

TEST_CASE("classification over a small box") {
    ClassifyReport rep = classify_rank4(RBox{2, 2, 3, 12}, 1);
    CHECK(rep.matches_theorem);
    CHECK(rep.gamma12_unreachable);
    CHECK(!rep.survivors.empty());
    for (const ClassifyEntry& e : rep.entries) {
        if (e.verdict == CandidateVerdict::SurvivorK1) {
            auto fam = as_known_family(e.k);
            REQUIRE(fam.has_value());
            CHECK(fam->family == FamilyTag::K1);
        }
        if (std::abs(e.r.x) == 1 && std::abs(e.r.y) == 2)
            CHECK(e.verdict == CandidateVerdict::Rejected);
    }
    // the table-1 parameters appear and are rejected
    bool saw_table1 = false;
    for (const ClassifyEntry& e : rep.entries)
        if (e.k == KParams{2, 4, 2, 1, 0, 2}) {
            saw_table1 = true;
            CHECK(e.verdict == CandidateVerdict::Rejected);
        }
    CHECK(saw_table1);
}

TEST_CASE("classification is independent of the worker count") {
    ClassifyReport a = classify_rank4(RBox{2, 2, 3, 12}, 1);
    ClassifyReport b = classify_rank4(RBox{2, 2, 3, 12}, 3);
    REQUIRE(a.entries.size() == b.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].r == b.entries[i].r);
        CHECK(a.entries[i].verdict == b.entries[i].verdict);
        CHECK(a.entries[i].reason == b.entries[i].reason);
    }
}
