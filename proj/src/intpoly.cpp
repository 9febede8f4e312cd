#include "fuscat/intpoly.hpp"

#include <algorithm>
#include <map>

#include "fuscat/errors.hpp"
#include "fuscat/numtheory.hpp"

namespace fuscat {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Int& v) {
    if (v == 0) return IntPoly();
    return IntPoly({v});
}

IntPoly IntPoly::monomial(int degree, const Int& lead) {
    std::vector<Int> c(degree + 1, Int(0));
    c[degree] = lead;
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(c));
}

Int IntPoly::eval(const Int& x) const {
    Int v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + Rat(*it);
    return v;
}

QuadVal IntPoly::eval(const QuadVal& x) const {
    QuadVal v;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + QuadVal(Rat(*it));
    return v;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (divisor.is_zero() || !divisor.is_monic())
        throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<Int> rem = c_;
    int dd = divisor.degree();
    int dq = degree() - dd;
    if (dq < 0) return {IntPoly(), *this};
    std::vector<Int> quot(dq + 1, Int(0));
    for (int i = degree(); i >= dd; --i) {
        Int q = rem[i];
        if (q == 0) continue;
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeff(j);
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        if (!out.empty()) out += (a > 0) ? "+" : "-";
        else if (a < 0) out += "-";
        Int mag = abs(a);
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i > 0) {
            if (mag != 1) out += "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

const IntPoly& cyclotomic_poly(long n) {
    thread_local std::map<long, IntPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::domain_error("cyclotomic_poly: n must be positive");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> xn(n + 1, Int(0));
    xn[0] = -1;
    xn[n] = 1;
    IntPoly num((std::vector<Int>(xn)));
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = num.divmod_monic(cyclotomic_poly(d));
        if (!r.is_zero()) throw Error("cyclotomic_poly: inexact division");
        num = q;
    }
    return cache.emplace(n, std::move(num)).first->second;
}

std::vector<Int> integer_roots(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic())
        throw std::invalid_argument("integer_roots: polynomial must be monic and nonzero");
    std::vector<Int> roots;
    IntPoly cur = p;
    // strip roots at zero
    while (cur.degree() > 0 && cur.coeff(0) == 0) {
        roots.emplace_back(0);
        auto [q, r] = cur.divmod_monic(IntPoly({Int(0), Int(1)}));
        cur = q;
    }
    while (cur.degree() > 0) {
        Int k = abs(cur.coeff(0));
        bool found = false;
        for (Int d = 1; d * d <= k && !found; ++d) {
            if (k % d != 0) continue;
            Int e = k / d;
            for (const Int& cand : std::initializer_list<Int>{d, e, Int(-d), Int(-e)}) {
                if (cur.eval(cand) == 0) {
                    roots.push_back(cand);
                    auto [q, r] = cur.divmod_monic(IntPoly({-cand, Int(1)}));
                    cur = q;
                    found = true;
                    break;
                }
            }
        }
        if (!found) break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::pair<QuadVal, QuadVal> QuadraticFactor::roots() {
    Int disc = alpha * alpha - 4 * beta;
    if (disc < 0) throw Error("QuadraticFactor::roots: negative discriminant");
    QuadVal s = QuadVal::sqrt_of(disc);
    QuadVal half = QuadVal(make_rat(1, 2));
    QuadVal a{Rat(alpha)};
    return {(a + s) * half, (a - s) * half};
}

QuadraticFactor factor_with_known_double_root(const IntPoly& p, const Int& gamma) {
    if (p.degree() != 4 || !p.is_monic())
        throw std::invalid_argument("factor_with_known_double_root: need a monic quartic");
    if (p.eval(gamma) != 0 || p.derivative().eval(gamma) != 0)
        throw NotADoubleRoot("factor_with_known_double_root: " + gamma.get_str() +
                             " is not a double root of " + p.str());
    IntPoly lin({-gamma, Int(1)});
    auto [q1, r1] = p.divmod_monic(lin);
    auto [q2, r2] = q1.divmod_monic(lin);
    if (!r1.is_zero() || !r2.is_zero()) throw NotADoubleRoot("factor_with_known_double_root: inexact deflation");
    QuadraticFactor f;
    f.alpha = -q2.coeff(1);
    f.beta = q2.coeff(0);
    f.real_roots = (f.alpha * f.alpha - 4 * f.beta) >= 0;
    return f;
}

namespace {

// monic quartic with no rational roots -> try (t^2+pt+q)(t^2+rt+s) over Z
bool split_quartic(const IntPoly& f, IntPoly& g1, IntPoly& g2) {
    Int a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
    if (d == 0) return false;
    Int k = abs(d);
    std::vector<Int> divisors;
    for (Int t = 1; t * t <= k; ++t) {
        if (k % t != 0) continue;
        divisors.push_back(t);
        if (t != k / t) divisors.push_back(k / t);
    }
    for (const Int& q0 : divisors) {
        for (int sq : {1, -1}) {
            Int q = q0 * sq;
            if (q == 0 || d % q != 0) continue;
            Int s = d / q;
            // p + r = a, pr = b - q - s, ps + qr = c
            Int pr = b - q - s;
            Int disc = a * a - 4 * pr;
            if (disc < 0 || !is_perfect_square(disc)) continue;
            Int rt = isqrt(disc);
            for (int pm : {1, -1}) {
                Int twop = a + pm * rt;
                if (twop % 2 != 0) continue;
                Int p = twop / 2;
                Int r = a - p;
                if (p * s + q * r != c) continue;
                g1 = IntPoly({q, p, Int(1)});
                g2 = IntPoly({s, r, Int(1)});
                return true;
            }
        }
    }
    return false;
}

void add_quadratic_roots(const IntPoly& quad, ExactRoots& out) {
    Int alpha = -quad.coeff(1), beta = quad.coeff(0);
    QuadraticFactor f{alpha, beta, (alpha * alpha - 4 * beta) >= 0};
    if (!f.real_roots) {
        out.nonreal_pairs += 1;
        return;
    }
    auto [r1, r2] = f.roots();
    out.real.push_back(r1);
    out.real.push_back(r2);
}

}  // namespace

ExactRoots exact_roots(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("exact_roots: polynomial must be monic");
    ExactRoots out;
    IntPoly cur = p;
    for (const Int& r : integer_roots(p)) {
        out.real.emplace_back(Rat(r));
        auto [q, rem] = cur.divmod_monic(IntPoly({-r, Int(1)}));
        cur = q;
    }
    if (cur.degree() == 0) return out;
    if (cur.degree() == 2) {
        add_quadratic_roots(cur, out);
        return out;
    }
    if (cur.degree() == 4) {
        IntPoly g1, g2;
        if (split_quartic(cur, g1, g2)) {
            add_quadratic_roots(g1, out);
            add_quadratic_roots(g2, out);
            return out;
        }
    }
    throw EigenvalueDegreeTooHigh("exact_roots: irreducible factor of degree > 2 in " + cur.str());
}

}  // namespace fuscat
