#include <doctest.h>

#include <cmath>
#include <random>

#include "fuscat/cyclotomic.hpp"
#include "fuscat/errors.hpp"
#include "fuscat/numtheory.hpp"

using namespace fuscat;

TEST_CASE("roots of unity basics") {
    CHECK(CycloElem::root(3, 1) + CycloElem::root(3, 2) ==
          CycloElem::from_rational(3, Rat(-1)));
    CHECK(CycloElem::root(12, 1).galois(5) == CycloElem::root(12, 5));
    CHECK_THROWS_AS(CycloElem::root(12, 1).galois(4), NonInvertibleGaloisIndex);
    // mixed ambient orders embed into the lcm
    CHECK(CycloElem::root(4, 1) * CycloElem::root(3, 1) == CycloElem::root(12, 7));
}

TEST_CASE("sqrt(2) as the eighth-root sum") {
    CycloElem s = CycloElem::root(8, 1) + CycloElem::root(8, 7);
    CHECK(s.square() == CycloElem::from_rational(8, Rat(2)));  // minimal polynomial oracle
    CHECK(s == embed_quad(QuadVal::sqrt_of(Int(2)), 8));
}

TEST_CASE("gauss sums square to the radicand") {
    for (long c : {2, 3, 5, 6, 7, 10, 11, 13, 15, 21, 33, 93}) {
        CycloElem s = sqrt_as_cyclo(Int(c));
        CHECK(s.square() == CycloElem::from_rational(s.order(), Rat(c)));
    }
}

TEST_CASE("gauss sums take the positive square root") {
    // floating sanity: the exact construction must match +sqrt(c)
    for (long c : {2, 3, 5, 6, 7, 10, 11, 13, 15, 17, 21, 33}) {
        CycloElem s = sqrt_as_cyclo(Int(c));
        long n = s.order();
        double val = 0;
        for (long j = 0; j < n; ++j)
            val += s.coeffs()[j].get_d() * std::cos(2.0 * M_PI * j / n);
        CHECK(std::abs(val - std::sqrt(static_cast<double>(c))) < 1e-9);
    }
}

TEST_CASE("cyclo_to_quad") {
    CycloElem g = CycloElem::root(5, 1) - CycloElem::root(5, 2) - CycloElem::root(5, 3) +
                  CycloElem::root(5, 4);
    CHECK(g.square() == CycloElem::from_rational(5, Rat(5)));  // oracle first
    CHECK(cyclo_to_quad(g, Int(5)) == QuadVal::sqrt_of(Int(5)));

    CycloElem h = CycloElem::root(12, 1) + CycloElem::root(12, 11);
    CHECK(h.square() == CycloElem::from_rational(12, Rat(3)));
    CHECK(cyclo_to_quad(h, Int(3)) == QuadVal::sqrt_of(Int(3)));

    CHECK_THROWS_AS(cyclo_to_quad(CycloElem::root(4, 1), Int(3)), NotInSubfield);
    CHECK(cyclo_to_quad(CycloElem::from_rational(7, make_rat(2, 3)), Int(5)) ==
          QuadVal(make_rat(2, 3)));
    // half-integer coordinates appear for c = 1 mod 4
    CycloElem fifth = CycloElem::root(5, 1) + CycloElem::root(5, 4);
    CHECK(cyclo_to_quad(fifth, Int(5)) == QuadVal(make_rat(-1, 2), make_rat(1, 2), Int(5)));
}

TEST_CASE("galois action is a ring homomorphism") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (long n : {5, 8, 12, 15}) {
        for (int iter = 0; iter < 10; ++iter) {
            std::vector<Rat> a(n), b(n);
            for (long i = 0; i < n; ++i) {
                a[i] = coeff(rng);
                b[i] = coeff(rng);
            }
            CycloElem x = CycloElem::from_coeffs(n, a);
            CycloElem y = CycloElem::from_coeffs(n, b);
            for (long k = 1; k < n; ++k) {
                if (std::gcd(k, n) != 1) continue;
                CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
                CHECK((x + y).galois(k) == x.galois(k) + y.galois(k));
            }
        }
    }
}

TEST_CASE("primitive root sums realize the moebius function") {
    for (long n = 1; n <= 60; ++n) {
        CycloElem sum(n);
        for (long j = 0; j < n; ++j)
            if ((n == 1 && j == 0) || (n > 1 && std::gcd(j, n) == 1))
                sum += CycloElem::root(n, j);
        CHECK(sum == CycloElem::from_rational(n, Rat(moebius(Int(n)))));
    }
}

TEST_CASE("conjugation and rationality") {
    CycloElem z = CycloElem::root(7, 3);
    CycloElem tr = z + z.conj();
    CHECK(tr.conj() == tr);
    CHECK(!tr.is_rational());
    CHECK(CycloElem::root(6, 2).order() == 6);
    CHECK(cyclo_to_quad(CycloElem::root(6, 1) + CycloElem::root(6, 5), Int(1)) == QuadVal(1));
}

TEST_CASE("embedding respects value equality") {
    CycloElem a = CycloElem::root(6, 1);
    CycloElem b = a.embedded(24);
    CHECK(a == b);
    CHECK(b.order() == 24);
    CHECK_THROWS(a.embedded(16));
}
