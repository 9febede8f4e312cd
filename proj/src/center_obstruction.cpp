#include "fuscat/center_obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "fuscat/cyclotomic.hpp"
#include "fuscat/errors.hpp"
#include "fuscat/numtheory.hpp"
#include "fuscat/roots_of_unity.hpp"

namespace fuscat {

K1DimensionData k1_dimension_data(long long e) {
    K1DimensionData d;
    d.e = e;
    d.delta = QuadVal(make_rat(e, 2), make_rat(1, 2), make_int(e * e + 12));
    d.dim_total = QuadVal(6) + QuadVal(e) * d.delta;
    d.special_case_e2 = (e == 2);
    d.integrality_ok = (e == 2 || e % 3 == 0);
    d.k = (e % 3 == 0) ? e / 3 : 0;
    return d;
}

std::vector<K1CenterData> k1_branchings(long long k) {
    if (k < 0) throw std::domain_error("k1_branchings: k must be nonnegative");
    K1DimensionData dd = k1_dimension_data(3 * k);
    auto [c_sf, m] = squarefree_part(make_int(9 * k * k + 12));
    std::vector<K1CenterData> out;
    for (long long r = 0; r <= k; ++r) {
        long long p = k - r;
        long long sq = 6 + 5 * k * k - 2 * (r * r + p * p);
        if (sq < 0) continue;
        K1CenterData d;
        d.e = 3 * k;
        d.k = k;
        d.delta = dd.delta;
        d.alpha = k;
        d.r = r;
        d.p = p;
        d.gamma_sq_sum = sq;
        d.c_sf = c_sf;
        d.m = m;
        QuadVal kd = QuadVal(k) * dd.delta;
        d.dims["A"] = QuadVal(1) + kd;
        d.dims["B"] = QuadVal(2) + kd;
        d.dims["C"] = QuadVal(2) + kd;
        d.dims["D"] = QuadVal(2) + QuadVal(d.alpha) * dd.delta;
        d.dims["E"] = QuadVal(1) + QuadVal(r) * dd.delta;
        d.dims["H"] = QuadVal(1) + QuadVal(r) * dd.delta;
        d.dims["G"] = QuadVal(1) + QuadVal(p) * dd.delta;
        d.dims["J"] = QuadVal(1) + QuadVal(p) * dd.delta;
        out.push_back(std::move(d));
    }
    return out;
}

PairedTargets k1_twist_targets(const K1CenterData& data, int sign) {
    PairedTargets t;
    long long k = data.k, r = data.r, p = data.p;
    t.a = make_int(4 * r * p);
    t.b = make_int(k) * data.m;
    t.d = (sign >= 0 ? make_int(k - 2) : make_int(k + 2)) * data.m;
    t.d_nonneg = (t.d >= 0);
    t.budget = 12 + 6 * k * k + 8 * r * p;
    t.sum_target = QuadVal(Rat(-t.a), Rat(-t.b), data.c_sf);
    t.sumsq_target = QuadVal(Rat(-t.a), Rat(-t.d), data.c_sf);
    return t;
}

PhiRatioCheck phi_ratio_bound(const Int& c, long threshold) {
    if (threshold != 21 && threshold != 33)
        throw std::invalid_argument("phi_ratio_bound: threshold must be 21 or 33");
    if (c % 2 == 0 || c % 3 != 0 || !is_squarefree(c) || c < threshold)
        throw HypothesisViolation("phi_ratio_bound: c must be an odd squarefree multiple of 3, >= " +
                                  std::to_string(threshold));
    PhiRatioCheck chk;
    Int phi_c = euler_phi(c);
    Int phi_t = euler_phi(Int(threshold));
    chk.lhs = phi_c * phi_c * threshold;
    chk.rhs = phi_t * phi_t * c;
    chk.holds = (chk.lhs >= chk.rhs);
    return chk;
}

ParamVerdict k1_feasible(long long e) {
    ParamVerdict v;
    v.param = e;
    K1DimensionData dd = k1_dimension_data(e);
    v.exact["delta"] = dd.delta.str();
    v.exact["dim"] = dd.dim_total.str();
    if (e == 2) {
        v.verdict = Feasibility::FeasibleKnown;
        v.case_label = "delta rational (e = 2)";
        v.reason = "representation ring of A4";
        return v;
    }
    if (!dd.integrality_ok) {
        v.verdict = Feasibility::Infeasible;
        v.case_label = "integrality";
        v.reason = "e must be divisible by 3 (or equal 2)";
        return v;
    }
    long long k = dd.k;
    Int s = make_int(9 * k * k + 12);
    auto [c, m] = squarefree_part(s);
    v.exact["k"] = std::to_string(k);
    v.exact["c_sf"] = c.get_str();
    v.exact["m"] = m.get_str();
    v.exact["budget_net"] = std::to_string(12 + 6 * k * k);
    v.assumptions.push_back("branching multiplicities r, p are nonnegative integers");
    v.assumptions.push_back("the 8rp terms cancel: verdict independent of the branching");
    if (k < 2) {
        v.verdict = Feasibility::Feasible;
        v.case_label = "paired bound inapplicable (d = (k-2)m < 0)";
        v.reason = "no obstruction fires";
        v.assumptions.push_back(
            "the weak-sign squared-sum coefficient is negative, outside the paired bound's "
            "hypotheses; treated as unobstructed");
        return v;
    }
    Int budget = make_int(12 + 6 * k * k);
    if (c == 3 || c == 21) {
        Int pb = make_int(bound_paired(Int(0), Int(make_int(k) * m), c, Int(make_int(k - 2) * m)));
        v.exact["paired_bound_net"] = pb.get_str();
        v.case_label = (c == 3) ? "c = 3" : "c = 21";
        v.verdict = (budget >= pb) ? Feasibility::Feasible : Feasibility::Infeasible;
        v.reason = (budget >= pb) ? "budget covers the paired bound"
                                  : "budget " + budget.get_str() + " < bound " + pb.get_str();
        return v;
    }
    // c >= 33: substitute phi(c)/sqrt(c) >= phi(33)/sqrt(33); rejection becomes
    // 121 (12 + 6k^2)^2 < 36 * 33 * k^2 * (9k^2 + 12)
    PhiRatioCheck ratio = phi_ratio_bound(c, 33);
    v.exact["phi_ratio_lhs"] = ratio.lhs.get_str();
    v.exact["phi_ratio_rhs"] = ratio.rhs.get_str();
    Int lhs = 121 * budget * budget;
    Int rhs = 36 * 33 * make_int(k * k) * s;
    v.exact["phi_route_lhs"] = lhs.get_str();
    v.exact["phi_route_rhs"] = rhs.get_str();
    v.case_label = "c >= 33 (phi-ratio route), c = " + c.get_str();
    v.verdict = (lhs >= rhs) ? Feasibility::Feasible : Feasibility::Infeasible;
    v.reason = (lhs >= rhs) ? "budget covers the phi-ratio bound"
                            : "budget falls below the phi-ratio bound";
    return v;
}

std::vector<K2CenterData> k2_branchings(long long c) {
    if (c < 0) throw std::domain_error("k2_branchings: c must be nonnegative");
    std::vector<K2CenterData> out;
    QuadVal dval = QuadVal(Rat(make_int(c)), Rat(1), make_int(c * c + 1));
    long long twoc = 2 * c;
    for (long long g = 0; g <= c; ++g) {
        long long h = c - g;
        for (long long j = 0; j <= twoc; ++j)
            for (long long l = 0; l + j <= twoc; ++l)
                for (long long n = 0; n + l + j <= twoc; ++n) {
                    long long q = twoc - j - l - n;
                    std::array<long long, 4> jlnq{j, l, n, q};
                    std::array<long long, 4> perm = jlnq;
                    std::sort(perm.begin(), perm.end());
                    do {
                        long long sumsq = j * j + l * l + n * n + q * q;
                        long long gamma_sq = 4 + 3 * c * c - g * g - h * h - sumsq;
                        if (gamma_sq < 0) continue;
                        long long dots =
                            j * perm[0] + l * perm[1] + n * perm[2] + q * perm[3];
                        long long cross = 3 * c * c - 2 * g * h - dots;
                        if (cross < 0) continue;
                        K2CenterData d;
                        d.c = c;
                        d.dval = dval;
                        d.g = g;
                        d.h = h;
                        d.jlnq = jlnq;
                        d.kmpr = perm;
                        d.gamma_sq_sum = gamma_sq;
                        d.gamma_cross_sum = cross;
                        d.pair_sum_bound = 4 + 3 * c * c;
                        out.push_back(std::move(d));
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
    }
    return out;
}

ParamVerdict k2_feasible(long long c) {
    ParamVerdict v;
    v.param = c;
    QuadVal dval = QuadVal(Rat(make_int(c)), Rat(1), make_int(c * c + 1));
    v.exact["d"] = dval.str();
    if (c == 0) {
        v.verdict = Feasibility::FeasibleKnown;
        v.case_label = "d rational (c = 0)";
        v.reason = "representation ring of Z/4";
        return v;
    }
    v.assumptions.push_back("tr(theta^2) sign unresolved: a candidate survives if either twist case "
                            "admits a solution");
    Int cc = make_int(c);
    Int t1 = 4 + 3 * cc * cc;
    v.exact["pair_sum_bound"] = t1.get_str();
    // case theta = 1: 4 + 3c^2 >= (8/sqrt 2) c^2, cross-squared; c = 1 is then
    // excluded by the exact count 8 > 7
    bool case1 = (t1 * t1 >= 32 * cc * cc * cc * cc) && (c != 1);
    v.exact["case1_lhs_sq"] = Int(t1 * t1).get_str();
    v.exact["case1_rhs_sq"] = Int(32 * cc * cc * cc * cc).get_str();
    // case theta = i, split on whether (c^2 + 1)/2 is a perfect square
    Int c2p1 = cc * cc + 1;
    bool half_square = (c2p1 % 2 == 0) && is_perfect_square(c2p1 / 2);
    v.exact["c2_plus_1"] = c2p1.get_str();
    v.exact["half_is_square"] = half_square ? "yes" : "no";
    Int t2 = 8 + 6 * cc * cc;
    bool case2;
    if (half_square) {
        // 8 + 6c^2 >= (8/sqrt 2 + 2) c^2  <=>  (8 + 4c^2)^2 >= 32 c^4
        Int lhs = 8 + 4 * cc * cc;
        case2 = (lhs * lhs >= 32 * cc * cc * cc * cc);
        v.exact["case2_lhs_sq"] = Int(lhs * lhs).get_str();
        v.exact["case2_rhs_sq"] = Int(32 * cc * cc * cc * cc).get_str();
        v.case_label = "theta = i, (c^2+1)/2 a perfect square";
    } else {
        // 8 + 6c^2 >= (16/sqrt 5) c^2  <=>  5 (8 + 6c^2)^2 >= 256 c^4
        case2 = (5 * t2 * t2 >= 256 * cc * cc * cc * cc);
        v.exact["case2_lhs_sq"] = Int(5 * t2 * t2).get_str();
        v.exact["case2_rhs_sq"] = Int(256 * cc * cc * cc * cc).get_str();
        v.case_label = "theta = i, (c^2+1)/2 not a perfect square";
    }
    v.verdict = (case1 || case2) ? Feasibility::Feasible : Feasibility::Infeasible;
    if (case1) v.reason = "theta = 1 case survives";
    else if (case2) v.reason = "theta = i case survives";
    else v.reason = "both twist cases obstructed";
    return v;
}

TwistCheckReport twist_identity_checks(char family, long long param) {
    TwistCheckReport rep{};
    if (family == '1') {
        long long e = param;
        K1DimensionData dd = k1_dimension_data(e);
        long long k = dd.k;
        QuadVal kd = QuadVal(k) * dd.delta;
        QuadVal dimsum = QuadVal(1) + (QuadVal(1) + kd) + (QuadVal(2) + kd) + (QuadVal(2) + kd);
        rep.dim_trace_forced = (dimsum == dd.dim_total) && (QuadVal(1) + kd).sign() > 0;
        // 2 + 2 t_D + t_E + t_G = 0 over cube roots
        int solutions = 0;
        bool only_conjugate_pair = true;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int cexp = 0; cexp < 3; ++cexp) {
                    CycloElem expr = CycloElem::from_rational(3, Rat(2)) +
                                     CycloElem::root(3, a).scaled(Rat(2)) + CycloElem::root(3, b) +
                                     CycloElem::root(3, cexp);
                    if (!expr.is_zero()) continue;
                    ++solutions;
                    bool is_omega = (a == 1 && b == 2 && cexp == 2);
                    bool is_omega_sq = (a == 2 && b == 1 && cexp == 1);
                    if (!(is_omega || is_omega_sq)) only_conjugate_pair = false;
                    if (a == 0) only_conjugate_pair = false;
                }
        rep.theta_d_unique = (solutions == 2) && only_conjugate_pair;
        // k + alpha w + (r + p) w^2 = 0 iff alpha = k and r + p = k
        rep.alpha_r_p_forced = true;
        for (long long alpha = 0; alpha <= 2 * k; ++alpha)
            for (long long r = 0; alpha + r <= 2 * k; ++r) {
                long long p = 2 * k - alpha - r;
                CycloElem expr = CycloElem::from_rational(3, Rat(make_int(k))) +
                                 CycloElem::root(3, 1).scaled(Rat(make_int(alpha))) +
                                 CycloElem::root(3, 2).scaled(Rat(make_int(r + p)));
                bool zero = expr.is_zero();
                bool forced = (alpha == k && r + p == k);
                if (zero != forced) rep.alpha_r_p_forced = false;
            }
        rep.k2_sign_paired = true;
        rep.k2_double_d_rejected = true;
        return rep;
    }
    // family '2'
    long long c = param;
    QuadVal dval = QuadVal(Rat(make_int(c)), Rat(1), make_int(c * c + 1));
    QuadVal dimsum = QuadVal(1) + (QuadVal(1) + QuadVal(2 * c) * dval) +
                     (QuadVal(1) + QuadVal(c) * dval) + (QuadVal(1) + QuadVal(c) * dval);
    rep.dim_trace_forced = (dimsum == QuadVal(4) + QuadVal(4 * c) * dval);
    // fourth roots with theta_D + theta_E + theta_G + theta_H = 0 and equal
    // squares: exactly the sign-paired assignments
    rep.k2_sign_paired = true;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int cc2 = 0; cc2 < 4; ++cc2)
                for (int d = 0; d < 4; ++d) {
                    CycloElem sum = CycloElem::root(4, a) + CycloElem::root(4, b) +
                                    CycloElem::root(4, cc2) + CycloElem::root(4, d);
                    bool eq_squares = ((2 * a) % 4 == (2 * b) % 4) &&
                                      ((2 * b) % 4 == (2 * cc2) % 4) &&
                                      ((2 * cc2) % 4 == (2 * d) % 4);
                    if (!sum.is_zero() || !eq_squares) continue;
                    std::array<int, 4> t{a, b, cc2, d};
                    std::sort(t.begin(), t.end());
                    bool paired = (t[0] == t[1] && t[2] == t[3] && (t[2] - t[0]) == 2);
                    if (!paired) rep.k2_sign_paired = false;
                }
    // I(Y) = 2D would give 0 = tr theta_{I(Y)} = 2 (2 + 2cd) theta_D
    rep.k2_double_d_rejected = ((QuadVal(2) + QuadVal(2 * c) * dval).sign() > 0);
    rep.theta_d_unique = true;
    rep.alpha_r_p_forced = true;
    return rep;
}

ScanReport scan_family(char family, long long max_param, int workers) {
    if (family != '1' && family != '2')
        throw std::invalid_argument("scan_family: family must be '1' or '2'");
    ScanReport rep;
    rep.family = family;
    rep.max_param = max_param;
    rep.verdicts.resize(max_param + 1);
    if (workers < 1) workers = 1;
    std::atomic<long long> next{0};
    auto work = [&] {
        for (long long p = next.fetch_add(1); p <= max_param; p = next.fetch_add(1))
            rep.verdicts[p] = (family == '1') ? k1_feasible(p) : k2_feasible(p);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const ParamVerdict& v : rep.verdicts)
        if (v.feasible()) rep.survivors.push_back(v.param);
    return rep;
}

}  // namespace fuscat
