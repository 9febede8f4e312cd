#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fuscat/fusion_ring.hpp"

namespace fuscat {

// Six-parameter coordinates of the rank-4 rings with duality (0)(X Z)(Y):
//   X^2 = pX + lY + cZ        XY = qX + kY + lZ
//   Y^2 = 1 + kX + eY + kZ    YZ = lX + kY + qZ
//   Z^2 = cX + lY + pZ        XZ = 1 + pX + qY + pZ
struct KParams {
    long long c, e, k, l, p, q;
    bool operator==(const KParams&) const = default;
    std::string str() const;
};

// Four-parameter coordinates. Valid quadruples satisfy
//   yg + xd + y = 0 (mod 2)
//   dxy = g(2x^2 - y^2) + x^2 + 1
// and all six derived K-values are nonnegative.
struct RParams {
    long long x, y, g, d;
    bool operator==(const RParams&) const = default;
    std::string str() const;
};

struct KConstraintReport {
    bool ok;
    std::array<bool, 4> equations;
    bool nonneg;
};

KConstraintReport k_constraints_check(long long c, long long e, long long k, long long l,
                                      long long p, long long q);
inline bool k_constraints_ok(const KParams& p) {
    return k_constraints_check(p.c, p.e, p.k, p.l, p.p, p.q).ok;
}

// The ring K(c,e,k,l,p,q); throws ConstraintViolation unless the constraint
// system holds.
FusionRing build_K(const KParams& p);

// Multiplication matrices straight from the parameters, without the
// nonnegativity gate (used by determinant scans over sign-indefinite ranges).
std::array<IntMatrix, 4> k_mult_matrices_raw(long long c, long long e, long long k, long long l,
                                             long long p, long long q);

// six K-values of a quadruple, in order (c, e, k, l, p, q); no validity check
// beyond the parity of the two halved entries (throws ConstraintViolation)
KParams r_to_k(const RParams& p);

bool r_valid(const RParams& p);

// Inverts r_to_k by the gcd-extraction procedure; returns the representative
// that satisfies the quadruple equation itself (sign-normalized via b = +-1).
// Throws NoSolution when the parameters do not fit the two-self-dual shape.
RParams k_to_r(const KParams& p);

struct RPredicates {
    bool xy_parity_odd;  // x + y odd
    bool g_nonzero;
    bool xy_same_sign;  // xg, yg >= 0 force a common sign (or zero)
};
RPredicates structural_predicates(const RParams& p);

struct RBox {
    long long xmax = 3, ymax = 3, gmax = 6, dmax = 40;
};

// All valid quadruples with |x| <= xmax, ..., in lexicographic order.
std::vector<RParams> enumerate_R(const RBox& box);

// K1(e) = K(1,e,1,0,0,0) and K2(c) = K(c,0,0,1,c,0)
KParams k1_params(long long e);
KParams k2_params(long long c);
FusionRing build_K1(long long e);
FusionRing build_K2(long long c);

enum class FamilyTag { K1, K2 };
struct FamilyForm {
    FamilyTag family;
    long long param;
};
// Recognize a K-tuple as K1(e) or K2(c).
std::optional<FamilyForm> as_known_family(const KParams& p);

}  // namespace fuscat
