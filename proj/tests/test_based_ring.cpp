#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "fuscat/codegree_obstruction.hpp"
#include "fuscat/errors.hpp"
#include "fuscat/families.hpp"
#include "fuscat/fusion_ring.hpp"

using namespace fuscat;
using fuscat::testing::a4_character_ring;
using fuscat::testing::table1_ring;
using fuscat::testing::z4_group_ring;

TEST_CASE("axiom verification") {
    CHECK(verify_based_ring(table1_ring()).pass);
    CHECK(verify_based_ring(build_K1(0)).pass);
    CHECK(verify_based_ring(a4_character_ring()).pass);
    CHECK(verify_based_ring(z4_group_ring()).pass);

    // breaking N[1][3][0] = 2 violates the duality axiom
    FusionRing good = build_K1(0);
    std::vector<long long> t(64);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) t[(i * 4 + j) * 4 + k] = good.N(i, j, k);
    t[(1 * 4 + 3) * 4 + 0] = 2;
    FusionRing bad(4, {0, 3, 2, 1}, t);
    VerificationReport rep = verify_based_ring(bad);
    CHECK(!rep.pass);
    bool duality_failed = false;
    for (const AxiomCheck& a : rep.mandatory)
        if (a.name.rfind("duality (", 0) == 0 && !a.pass) duality_failed = true;
    CHECK(duality_failed);

    CHECK_THROWS_AS(FusionRing(4, {0, 3, 2, 1}, std::vector<long long>(63, 0)), ShapeMismatch);
}

TEST_CASE("multiplication matrices match the displayed shapes") {
    for (long c : {0, 1, 2, 5}) {
        auto ms = mult_matrices(build_K2(c));
        long mx[4][4] = {{0, 0, 0, 1}, {1, c, 0, c}, {0, 1, 0, 0}, {0, c, 1, c}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(ms[1].at(i, j) == mx[i][j]);
        CHECK(ms[0] == IntMatrix::identity(4));
    }
    for (long e : {0, 3, 6}) {
        auto ms = mult_matrices(build_K1(e));
        long my[4][4] = {{0, 0, 1, 0}, {0, 0, 1, 0}, {1, 1, e, 1}, {0, 0, 1, 0}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(ms[2].at(i, j) == my[i][j]);
    }
}

TEST_CASE("Frobenius-Perron dimensions") {
    for (long e : {0, 3, 6, 9}) {
        FpdimResult fp = fpdim(build_K1(e));
        QuadVal delta(make_rat(e, 2), make_rat(1, 2), Int(e * e + 12));
        CHECK(fp.dims[0] == QuadVal(1));
        CHECK(fp.dims[1] == QuadVal(1));
        CHECK(fp.dims[2] == delta);
        CHECK(fp.dims[3] == QuadVal(1));
        CHECK(fp.total == QuadVal(6) + QuadVal(e) * delta);
    }
    for (long c : {1, 2, 7}) {
        FpdimResult fp = fpdim(build_K2(c));
        QuadVal d(Rat(c), Rat(1), Int(c * c + 1));
        CHECK(fp.dims[1] == d);
        CHECK(fp.dims[3] == d);
        CHECK(fp.total == QuadVal(4) + QuadVal(4 * c) * d);
    }
    // rational special case: dimensions (1, 1, 3, 1), global dimension 12
    FpdimResult fp = fpdim(build_K1(2));
    CHECK(fp.dims[2] == QuadVal(3));
    CHECK(fp.total == QuadVal(12));
}

TEST_CASE("FPdim is multiplicative on structure constants") {
    for (const FusionRing& r : {build_K1(5 * 3), build_K2(4), table1_ring()}) {
        FpdimResult fp = fpdim(r);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                QuadVal rhs;
                for (int k = 0; k < 4; ++k) rhs += QuadVal(r.N(i, j, k)) * fp.dims[k];
                CHECK(fp.dims[i] * fp.dims[j] == rhs);
            }
    }
}

TEST_CASE("formal codegrees") {
    CodegreeSet cs = formal_codegrees(table1_ring());
    REQUIRE(cs.values.size() == 4);
    CHECK(cs.values[0] == QuadVal(Rat(36), Rat(20), Int(3)));
    CHECK(cs.values[1] == QuadVal(8));
    CHECK(cs.values[2] == QuadVal(8));
    CHECK(cs.values[3] == QuadVal(Rat(36), Rat(-20), Int(3)));

    CodegreeSet k13 = formal_codegrees(build_K1(3));
    // double root 3 and the conjugate pair (21 +- 3 sqrt(21))/2
    CHECK(std::count(k13.values.begin(), k13.values.end(), QuadVal(3)) == 2);
    QuadVal big(make_rat(21, 2), make_rat(3, 2), Int(21));
    CHECK(std::count(k13.values.begin(), k13.values.end(), big) == 1);
    CHECK(std::count(k13.values.begin(), k13.values.end(), big.conj()) == 1);
    // oracle: f1 f2 = 63 and f1 + f2 = 21
    CHECK(big * big.conj() == QuadVal(63));
    CHECK(big + big.conj() == QuadVal(21));

    CodegreeSet k20 = formal_codegrees(build_K2(0));
    for (const QuadVal& f : k20.values) CHECK(f == QuadVal(4));
}

TEST_CASE("codegree reciprocals sum to one across both families") {
    for (long long par = 0; par <= 50; ++par) {
        for (const FusionRing& r : {build_K1(par), build_K2(par)}) {
            CodegreeSet cs = formal_codegrees(r);
            QuadVal sum;
            for (const QuadVal& f : cs.values) sum += f.inverse();
            CHECK(sum == QuadVal(1));
        }
    }
}

TEST_CASE("codegrees invariant under the duality-preserving basis swap") {
    // the only nontrivial basis permutation fixing 1 and commuting with
    // duality swaps X and Z
    FusionRing r = build_K1(5 * 3);
    std::vector<long long> t(64);
    int perm[4] = {0, 3, 2, 1};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                t[(perm[i] * 4 + perm[j]) * 4 + perm[k]] = r.N(i, j, k);
    FusionRing swapped(4, {0, 3, 2, 1}, t);
    CHECK(verify_based_ring(swapped).pass);
    CodegreeSet a = formal_codegrees(r), b = formal_codegrees(swapped);
    CHECK(a.values == b.values);
}

TEST_CASE("isomorphism testing against oracle rings") {
    CHECK(is_isomorphic(build_K(KParams{1, 2, 1, 0, 0, 0}), a4_character_ring()).has_value());
    CHECK(is_isomorphic(build_K(KParams{0, 0, 0, 1, 0, 0}), z4_group_ring()).has_value());
    CHECK(!is_isomorphic(build_K1(0), build_K2(0)).has_value());
    CHECK(!is_isomorphic(build_K1(3), build_K1(6)).has_value());
    auto self = is_isomorphic(table1_ring(), table1_ring());
    REQUIRE(self.has_value());
    CHECK((*self)[0] == 0);
}

TEST_CASE("ring json round trip") {
    FusionRing r = table1_ring();
    std::string text = ring_to_json_text(r);
    FusionRing back = ring_from_json_text(text);
    CHECK(back == r);
    CHECK(back.labels() == std::vector<std::string>{"1", "X", "Y", "Z"});
    CHECK_THROWS_AS(ring_from_json_text("{\"rank\": 2}"), ShapeMismatch);
    CHECK_THROWS_AS(ring_from_json_text("not json"), ShapeMismatch);
}
