#include "fuscat/families.hpp"

#include <numeric>

#include "fuscat/errors.hpp"

namespace fuscat {

std::string KParams::str() const {
    return "K(" + std::to_string(c) + "," + std::to_string(e) + "," + std::to_string(k) + "," +
           std::to_string(l) + "," + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string RParams::str() const {
    return "R(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(g) + "," +
           std::to_string(d) + ")";
}

KConstraintReport k_constraints_check(long long c, long long e, long long k, long long l,
                                      long long p, long long q) {
    KConstraintReport rep{};
    rep.equations[0] = (k * l + l * c == l * p + k * q);
    rep.equations[1] = (k * p + l * e + k * c == 2 * l * q + k * k);
    rep.equations[2] = (l * l + c * c == 1 + q * q + p * p);
    rep.equations[3] = (l * l + k * k + q * q == 1 + 2 * p * k + q * e);
    rep.nonneg = (c >= 0 && e >= 0 && k >= 0 && l >= 0 && p >= 0 && q >= 0);
    rep.ok = rep.nonneg && rep.equations[0] && rep.equations[1] && rep.equations[2] && rep.equations[3];
    return rep;
}

FusionRing build_K(const KParams& par) {
    if (!k_constraints_ok(par))
        throw ConstraintViolation("build_K: " + par.str() + " violates the constraint system");
    long long c = par.c, e = par.e, k = par.k, l = par.l, p = par.p, q = par.q;
    auto idx = [](int i, int j, int kk) { return (i * 4 + j) * 4 + kk; };
    std::vector<long long> t(64, 0);
    auto set_product = [&](int i, int j, std::array<long long, 4> coeffs) {
        for (int kk = 0; kk < 4; ++kk) {
            t[idx(i, j, kk)] = coeffs[kk];
            t[idx(j, i, kk)] = coeffs[kk];
        }
    };
    for (int j = 0; j < 4; ++j) {
        t[idx(0, j, j)] = 1;
        t[idx(j, 0, j)] = 1;
    }
    set_product(1, 1, {0, p, l, c});     // X^2
    set_product(1, 2, {0, q, k, l});     // XY
    set_product(1, 3, {1, p, q, p});     // XZ
    set_product(2, 2, {1, k, e, k});     // Y^2
    set_product(2, 3, {0, l, k, q});     // YZ
    set_product(3, 3, {0, c, l, p});     // Z^2
    return FusionRing(4, {0, 3, 2, 1}, std::move(t), {"1", "X", "Y", "Z"});
}

std::array<IntMatrix, 4> k_mult_matrices_raw(long long c, long long e, long long k, long long l,
                                             long long p, long long q) {
    auto fill = [](std::array<std::array<long long, 4>, 4> rows) {
        IntMatrix m(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = make_int(rows[i][j]);
        return m;
    };
    IntMatrix mx = fill({{{0, 0, 0, 1}, {1, p, q, p}, {0, l, k, q}, {0, c, l, p}}});
    IntMatrix my = fill({{{0, 0, 1, 0}, {0, q, k, l}, {1, k, e, k}, {0, l, k, q}}});
    IntMatrix mz = fill({{{0, 1, 0, 0}, {0, p, l, c}, {0, q, k, l}, {1, p, q, p}}});
    return {IntMatrix::identity(4), mx, my, mz};
}

KParams r_to_k(const RParams& par) {
    long long x = par.x, y = par.y, g = par.g, d = par.d;
    long long top = y * g + x * d + y;
    if (top % 2 != 0)
        throw ConstraintViolation("r_to_k: " + par.str() + " fails the divisibility condition");
    KParams k{};
    k.c = top / 2;
    k.e = 2 * x * g - y * d + 2 * x;
    k.k = g * y;
    k.l = g * x;
    k.p = (y * g + x * d - y) / 2;
    k.q = x * g + x;
    if (k.c < 0 || k.e < 0 || k.k < 0 || k.l < 0 || k.p < 0 || k.q < 0)
        throw ConstraintViolation("r_to_k: " + par.str() + " yields a negative structure constant in " +
                                  k.str());
    return k;
}

bool r_valid(const RParams& par) {
    long long x = par.x, y = par.y, g = par.g, d = par.d;
    if ((y * g + x * d + y) % 2 != 0) return false;
    if (d * x * y != g * (2 * x * x - y * y) + x * x + 1) return false;
    long long vals[6] = {(y * g + x * d + y) / 2, 2 * x * g - y * d + 2 * x, g * y,
                         g * x,                   (y * g + x * d - y) / 2,  x * g + x};
    for (long long v : vals)
        if (v < 0) return false;
    return true;
}

RParams k_to_r(const KParams& par) {
    if (!k_constraints_ok(par))
        throw NoSolution("k_to_r: " + par.str() + " is not a valid parameter tuple");
    long long c = par.c, e = par.e, k = par.k, l = par.l, p = par.p, q = par.q;
    if (k == 0 && l == 0) throw NoSolution("k_to_r: k = l = 0 admits no valid quadruple");
    long long g = std::gcd(k, l);  // > 0
    long long x = l / g, y = k / g;
    long long a, b, d;
    if (x != 0) {
        if (q % x != 0) throw NoSolution("k_to_r: x does not divide q for " + par.str());
        a = q / x;
        b = a - g;
        if (c - p != b * y) throw NoSolution("k_to_r: c - p mismatch for " + par.str());
        long long num = p + c - g * y;
        if (num % x != 0) throw NoSolution("k_to_r: x does not divide p + c - gy for " + par.str());
        d = num / x;
    } else {
        // x = 0 forces q = 0, and y >= 1 determines b and d directly
        if (q != 0) throw NoSolution("k_to_r: q must vanish when l = 0 for " + par.str());
        if ((c - p) % y != 0) throw NoSolution("k_to_r: y does not divide c - p for " + par.str());
        b = (c - p) / y;
        a = g + b;
        if (e % y != 0) throw NoSolution("k_to_r: y does not divide e for " + par.str());
        d = -e / y;
    }
    if (b != 1 && b != -1) throw NoSolution("k_to_r: b = " + std::to_string(b) + " for " + par.str());
    if (d * b * x * y != g * b * (2 * x * x - y * y) + b * b * x * x + 1)
        throw NoSolution("k_to_r: quadruple equation fails for " + par.str());
    RParams r = (b == 1) ? RParams{x, y, g, d} : RParams{-x, -y, -g, -d};
    if (!r_valid(r) || !(r_to_k(r) == par))
        throw NoSolution("k_to_r: reconstruction failed for " + par.str());
    return r;
}

RPredicates structural_predicates(const RParams& p) {
    RPredicates out{};
    out.xy_parity_odd = ((p.x + p.y) % 2 != 0);
    out.g_nonzero = (p.g != 0);
    long long xg = p.x * p.g, yg = p.y * p.g;
    out.xy_same_sign = !(xg >= 0 && yg >= 0) || (p.x >= 0 && p.y >= 0) || (p.x <= 0 && p.y <= 0);
    return out;
}

std::vector<RParams> enumerate_R(const RBox& box) {
    std::vector<RParams> out;
    for (long long x = -box.xmax; x <= box.xmax; ++x)
        for (long long y = -box.ymax; y <= box.ymax; ++y)
            for (long long g = -box.gmax; g <= box.gmax; ++g)
                for (long long d = -box.dmax; d <= box.dmax; ++d) {
                    RParams p{x, y, g, d};
                    if (r_valid(p)) out.push_back(p);
                }
    return out;
}

KParams k1_params(long long e) { return KParams{1, e, 1, 0, 0, 0}; }
KParams k2_params(long long c) { return KParams{c, 0, 0, 1, c, 0}; }
FusionRing build_K1(long long e) { return build_K(k1_params(e)); }
FusionRing build_K2(long long c) { return build_K(k2_params(c)); }

std::optional<FamilyForm> as_known_family(const KParams& p) {
    if (p.c == 1 && p.k == 1 && p.l == 0 && p.p == 0 && p.q == 0) return FamilyForm{FamilyTag::K1, p.e};
    if (p.e == 0 && p.k == 0 && p.l == 1 && p.p == p.c && p.q == 0) return FamilyForm{FamilyTag::K2, p.c};
    return std::nullopt;
}

}  // namespace fuscat
