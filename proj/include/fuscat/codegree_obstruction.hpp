#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fuscat/families.hpp"
#include "fuscat/fusion_ring.hpp"

namespace fuscat {

// P_A = (t - gamma)^2 (t^2 - alpha t + beta) with gamma = 2x^2 + y^2 + 2.
struct QuarticFactorization {
    Int gamma, alpha, beta;
    bool quadratic_real;
    std::pair<QuadVal, QuadVal> quadratic_roots;  // valid when quadratic_real
    IntPoly source_poly;
};

// Builds the ring of a valid quadruple, checks that gamma = 2x^2 + y^2 + 2 is
// a double root of the characteristic polynomial of A, and factors. A failure
// here falsifies the classification, so NotADoubleRoot propagates.
QuarticFactorization gamma_double_root_check(const RParams& p);

struct GateVerdict {
    bool all_positive;
    bool recip_sum_one;      // sum 1/f_i = 1, exact
    bool recip_sq_bound;     // sum 1/f_i^2 <= (1/2)(1 + 1/f_1), exact
    QuadVal recip_sq_sum;    // lhs
    QuadVal recip_sq_limit;  // rhs
    QuadVal slack;           // rhs - lhs
    bool pass() const { return all_positive && recip_sum_one && recip_sq_bound; }
};

GateVerdict ostrik_gates(const CodegreeSet& cs);

struct GammaBoundVerdict {
    bool pass;                 // 2 < gamma < 8
    bool recip_identity;       // -alpha/beta = 2/gamma - 1
    Rat recip_sq_closed_form;  // 1 + 6/gamma^2 - 4/gamma - 2/beta
};

// Re-derives the inequality chain; requires beta >= gamma^2.
GammaBoundVerdict gamma_bound(const QuarticFactorization& f);

// Nonincreasing positive integer quadruples with a repeated entry and
// reciprocal sum 1; exactly eight exist.
std::vector<std::array<long, 4>> integer_codegree_tuples();

struct Gamma8Evidence {
    long long x, y, g, d;
    Int det_a;
};

struct Gamma8Report {
    bool excluded;  // every scanned determinant differs from 512
    Int det_at_g0;  // value of the determinant polynomial at g = 0
    std::vector<Gamma8Evidence> scan;
};

// (x, y) = (+-1, +-2) determinant scan: d is pinned by the quadruple
// equation and det A = 4608 g^2 +- 1024 g + 512 never equals 512 for g != 0.
Gamma8Report gamma8_exclusion(long long gmax = 12);

enum class CandidateVerdict {
    SurvivorK1,
    SurvivorK2,
    Rejected,
    Falsification,  // passed every filter but is not K1/K2, or a filter's premise failed
};

struct ClassifyEntry {
    RParams r;
    KParams k;
    Int gamma;
    CandidateVerdict verdict;
    std::string reason;
    std::vector<QuadVal> codegrees;
};

struct ClassifyReport {
    RBox box;
    std::vector<ClassifyEntry> entries;  // enumeration order
    std::vector<ClassifyEntry> survivors;
    bool gamma12_unreachable;  // no (x, y) in the box gives 2x^2 + y^2 + 2 = 12
    bool matches_theorem;      // survivors all K1/K2 and no falsification
};

ClassifyReport classify_rank4(const RBox& box, int workers = 1);

}  // namespace fuscat
