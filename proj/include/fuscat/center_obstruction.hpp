#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fuscat/numbers.hpp"
#include "fuscat/quadval.hpp"

namespace fuscat {

// Dimension and branching data for a hypothetical center over K1(e), e = 3k.
struct K1CenterData {
    long long e = 0, k = 0;
    QuadVal delta;                     // (e + sqrt(e^2 + 12)) / 2
    std::map<std::string, QuadVal> dims;  // A, B, C, D, E, G, H, J
    long long alpha = 0, r = 0, p = 0;    // alpha = k, r + p = k
    long long gamma_sq_sum = 0;           // 6 + 5k^2 - 2(r^2 + p^2)
    Int c_sf;                             // squarefree part of 9k^2 + 12
    Int m;                                // 9k^2 + 12 = c_sf * m^2
};

struct K1DimensionData {
    long long e;
    bool integrality_ok;    // e = 2 or 3 | e
    bool special_case_e2;   // rational delta, accepted outright
    long long k;            // e / 3 when integral
    QuadVal delta;
    QuadVal dim_total;      // 6 + 3k delta
};

K1DimensionData k1_dimension_data(long long e);

std::vector<K1CenterData> k1_branchings(long long k);

// Real targets for the conjugate-closed twist sums, plus the root budget.
// sign = +1 takes d = (k-2)m in the squared sum, sign = -1 takes d = (k+2)m.
struct PairedTargets {
    QuadVal sum_target;    // -4rp - km sqrt(c)
    QuadVal sumsq_target;  // -4rp + (-k +- 2) m sqrt(c)
    long long budget;      // 2 sum gamma_i^2 = 12 + 6k^2 + 8rp
    Int a, b, d;           // the bound coordinates: a = 4rp, b = km, d = (k -+ 2)m
    bool d_nonneg;
};

PairedTargets k1_twist_targets(const K1CenterData& data, int sign);

enum class Feasibility { Feasible, FeasibleKnown, Infeasible };

struct ParamVerdict {
    long long param;
    Feasibility verdict;
    std::string case_label;
    std::string reason;
    std::vector<std::string> assumptions;
    std::map<std::string, std::string> exact;  // serialized evidence values
    bool feasible() const { return verdict != Feasibility::Infeasible; }
};

ParamVerdict k1_feasible(long long e);

// phi(c)/sqrt(c) >= phi(threshold)/sqrt(threshold), cross-multiplied; the
// threshold is 33 (or 21). Throws HypothesisViolation off-hypothesis.
struct PhiRatioCheck {
    Int lhs, rhs;  // phi(c)^2 * threshold vs phi(threshold)^2 * c
    bool holds;
};
PhiRatioCheck phi_ratio_bound(const Int& c, long threshold = 33);

// Branching data for a hypothetical center over K2(c).
struct K2CenterData {
    long long c = 0;
    QuadVal dval;  // c + sqrt(c^2 + 1)
    long long g = 0, h = 0;
    std::array<long long, 4> jlnq{};  // X-multiplicities under D, E, G, H
    std::array<long long, 4> kmpr{};  // Z-multiplicities, a permutation of jlnq
    long long gamma_sq_sum = 0;    // from the squares identity
    long long gamma_cross_sum = 0;  // sum gamma_i gamma_i^*
    long long pair_sum_bound = 0;   // 4 + 3c^2
};

std::vector<K2CenterData> k2_branchings(long long c);

ParamVerdict k2_feasible(long long c);

// Executable forms of the forced-twist arguments.
struct TwistCheckReport {
    bool dim_trace_forced;       // 1 + dim A + dim B + dim C = dim C(ring), dims positive
    bool theta_d_unique;         // cube roots: 2 + 2t_D + t_E + t_G = 0 has only the
                                 // conjugate pair of solutions with t_D != 1
    bool alpha_r_p_forced;       // k + alpha w + (r + p) w^2 = 0 iff alpha = k, r + p = k
    bool k2_sign_paired;         // fourth roots with equal squares summing to 0 pair up
    bool k2_double_d_rejected;   // I(Y) = 2D would force a vanishing twist
};

TwistCheckReport twist_identity_checks(char family, long long param);

struct ScanReport {
    char family;  // '1' or '2'
    long long max_param;
    std::vector<ParamVerdict> verdicts;
    std::vector<long long> survivors;
};

ScanReport scan_family(char family, long long max_param, int workers = 1);

}  // namespace fuscat
