#include "fuscat/cyclotomic.hpp"

#include <numeric>

#include "fuscat/errors.hpp"
#include "fuscat/intpoly.hpp"
#include "fuscat/numtheory.hpp"

namespace fuscat {

CycloElem::CycloElem(long order) : n_(order) {
    if (order < 1) throw std::domain_error("CycloElem: order must be positive");
    c_.assign(n_, Rat(0));
}

CycloElem CycloElem::root(long order, long exponent) {
    CycloElem z(order);
    long e = ((exponent % order) + order) % order;
    z.c_[e] = 1;
    z.reduce();
    return z;
}

CycloElem CycloElem::from_rational(long order, const Rat& v) {
    CycloElem z(order);
    z.c_[0] = v;
    return z;
}

CycloElem CycloElem::from_coeffs(long order, std::vector<Rat> coeffs) {
    CycloElem z(order);
    if (coeffs.size() != static_cast<size_t>(order))
        throw std::invalid_argument("CycloElem::from_coeffs: wrong length");
    z.c_ = std::move(coeffs);
    z.reduce();
    return z;
}

void CycloElem::reduce() {
    const IntPoly& phi = cyclotomic_poly(n_);
    int d = phi.degree();
    for (int i = n_ - 1; i >= d; --i) {
        if (c_[i] == 0) continue;
        Rat q = c_[i];
        for (int j = 0; j <= d; ++j) c_[i - d + j] -= q * Rat(phi.coeff(j));
    }
    for (long i = d; i < n_; ++i) c_[i] = 0;
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
    if (n_ != o.n_) {
        long m = std::lcm(n_, o.n_);
        return embedded(m) + o.embedded(m);
    }
    CycloElem r(n_);
    for (long i = 0; i < n_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;  // sum of canonical forms is canonical
}

CycloElem CycloElem::operator-(const CycloElem& o) const { return *this + (-o); }

CycloElem CycloElem::operator-() const {
    CycloElem r(n_);
    for (long i = 0; i < n_; ++i) r.c_[i] = -c_[i];
    return r;
}

CycloElem CycloElem::scaled(const Rat& k) const {
    CycloElem r(n_);
    for (long i = 0; i < n_; ++i) r.c_[i] = c_[i] * k;
    return r;
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    if (n_ != o.n_) {
        long m = std::lcm(n_, o.n_);
        return embedded(m) * o.embedded(m);
    }
    CycloElem r(n_);
    for (long i = 0; i < n_; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < n_; ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[(i + j) % n_] += c_[i] * o.c_[j];
        }
    }
    r.reduce();
    return r;
}

CycloElem CycloElem::galois(long k) const {
    long kk = ((k % n_) + n_) % n_;
    if (std::gcd(kk, n_) != 1)
        throw NonInvertibleGaloisIndex("galois: index " + std::to_string(k) +
                                       " not invertible mod " + std::to_string(n_));
    CycloElem r(n_);
    for (long i = 0; i < n_; ++i) {
        if (c_[i] == 0) continue;
        r.c_[(i * kk) % n_] += c_[i];
    }
    r.reduce();
    return r;
}

CycloElem CycloElem::embedded(long new_order) const {
    if (new_order == n_) return *this;
    if (new_order % n_ != 0)
        throw std::invalid_argument("CycloElem::embedded: new order must be a multiple");
    CycloElem r(new_order);
    long f = new_order / n_;
    for (long i = 0; i < n_; ++i) r.c_[i * f] = c_[i];
    r.reduce();
    return r;
}

bool CycloElem::equal(const CycloElem& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    long m = std::lcm(n_, o.n_);
    return embedded(m).c_ == o.embedded(m).c_;
}

bool CycloElem::is_zero() const {
    for (const Rat& v : c_)
        if (v != 0) return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (long i = 1; i < n_; ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycloElem::as_rational() const {
    if (!is_rational()) throw NotInSubfield("CycloElem::as_rational: " + str() + " is irrational");
    return c_[0];
}

std::string CycloElem::str() const {
    std::string out;
    for (long i = 0; i < n_; ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rat_str(c_[i]);
        if (i > 0) out += "*z" + std::to_string(n_) + "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

long sqrt_conductor(const Int& c) {
    if (c < 1) throw std::domain_error("sqrt_conductor: c must be >= 1");
    if (!is_squarefree(c)) throw std::domain_error("sqrt_conductor: c must be squarefree");
    if (c == 1) return 1;
    if (c % 4 == 1) return to_long(c);
    return to_long(4 * c);
}

namespace {

// quadratic Gauss sum for the Jacobi character mod odd squarefree m:
// equals sqrt(m) when m = 1 mod 4 and i*sqrt(m) when m = 3 mod 4
CycloElem jacobi_gauss_sum(long m) {
    CycloElem g(m);
    CycloElem acc(m);
    for (long j = 1; j < m; ++j) {
        Int jj(j), mm(m);
        int chi = mpz_jacobi(jj.get_mpz_t(), mm.get_mpz_t());
        if (chi == 0) continue;
        CycloElem term = CycloElem::root(m, j);
        acc = (chi > 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

CycloElem sqrt_as_cyclo(const Int& c) {
    if (c < 1) throw std::domain_error("sqrt_as_cyclo: c must be >= 1");
    if (!is_squarefree(c)) throw std::domain_error("sqrt_as_cyclo: c must be squarefree");
    if (c == 1) return CycloElem::from_rational(1, Rat(1));
    if (c % 2 == 0) {
        // sqrt(2) = z8 + z8^-1
        CycloElem s2 = CycloElem::root(8, 1) + CycloElem::root(8, 7);
        if (c == 2) return s2;
        return s2 * sqrt_as_cyclo(c / 2);
    }
    long m = to_long(c);
    CycloElem g = jacobi_gauss_sum(m);
    if (m % 4 == 1) return g;
    // m = 3 mod 4: sqrt(m) = z4^3 * (i*sqrt(m))
    return CycloElem::root(4, 3) * g;
}

bool quad_embeddable(const QuadVal& v, long order) {
    if (v.is_rational()) return true;
    return order % sqrt_conductor(v.c()) == 0;
}

CycloElem embed_quad(const QuadVal& v, long order) {
    if (v.is_rational()) return CycloElem::from_rational(order, v.a());
    long cond = sqrt_conductor(v.c());
    if (order % cond != 0)
        throw NotInSubfield("embed_quad: sqrt(" + v.c().get_str() + ") not in Q(zeta_" +
                            std::to_string(order) + ")");
    CycloElem s = sqrt_as_cyclo(v.c()).embedded(order);
    return CycloElem::from_rational(order, v.a()) + s.scaled(v.b());
}

QuadVal cyclo_to_quad(const CycloElem& x, const Int& c) {
    if (c <= 1) {
        if (!x.is_rational())
            throw NotInSubfield("cyclo_to_quad: " + x.str() + " is not rational");
        return QuadVal(x.as_rational());
    }
    long cond = sqrt_conductor(c);
    long n = std::lcm(x.order(), cond);
    CycloElem xx = x.embedded(n);
    CycloElem s = sqrt_as_cyclo(c).embedded(n);
    // solve x = a + b*s in the power basis; index 0 carries 1, so any other
    // nonzero coordinate of s determines b
    Rat b(0);
    bool found = false;
    for (long j = 1; j < n && !found; ++j) {
        if (s.coeffs()[j] != 0) {
            b = xx.coeffs()[j] / s.coeffs()[j];
            found = true;
        }
    }
    if (!found) throw Error("cyclo_to_quad: sqrt embedding degenerated");
    Rat a = xx.coeffs()[0] - b * s.coeffs()[0];
    CycloElem recomposed = CycloElem::from_rational(n, a) + s.scaled(b);
    if (!recomposed.equal(xx))
        throw NotInSubfield("cyclo_to_quad: value not in Q(sqrt(" + c.get_str() + "))");
    return QuadVal(a, b, c);
}

}  // namespace fuscat
