#pragma once

#include <string>
#include <vector>

#include "fuscat/numbers.hpp"
#include "fuscat/quadval.hpp"

namespace fuscat {

// Exact element of Q(zeta_n), stored as a length-n coefficient vector over
// the powers zeta_n^0..zeta_n^{n-1}, reduced modulo Phi_n so that value
// equality at a fixed ambient order is coefficient equality. The order is the
// declared ambient order, not necessarily the conductor.
class CycloElem {
public:
    explicit CycloElem(long order);  // zero
    static CycloElem root(long order, long exponent);
    static CycloElem from_rational(long order, const Rat& v);
    // arbitrary coefficients over zeta^0..zeta^{order-1}, canonicalized
    static CycloElem from_coeffs(long order, std::vector<Rat> coeffs);

    long order() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem operator-() const;
    CycloElem scaled(const Rat& k) const;
    CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }

    // zeta_n -> zeta_n^k; requires gcd(k, n) = 1
    CycloElem galois(long k) const;
    CycloElem conj() const { return galois(-1); }
    CycloElem square() const { return *this * *this; }

    // re-express at a multiple of the current order
    CycloElem embedded(long new_order) const;

    bool equal(const CycloElem& o) const;
    bool operator==(const CycloElem& o) const { return equal(o); }

    bool is_zero() const;
    bool is_rational() const;
    Rat as_rational() const;  // throws NotInSubfield when irrational

    std::string str() const;

private:
    long n_ = 1;
    std::vector<Rat> c_;  // canonical: degree < phi(n), padded with zeros

    void reduce();
};

// smallest m with sqrt(c) in Q(zeta_m), for squarefree c >= 1
long sqrt_conductor(const Int& c);

// the positive square root of squarefree c >= 1 as an element of
// Q(zeta_{sqrt_conductor(c)}), built from quadratic Gauss sums
CycloElem sqrt_as_cyclo(const Int& c);

// a + b*sqrt(c) inside Q(zeta_order); requires sqrt_conductor | order
CycloElem embed_quad(const QuadVal& v, long order);
bool quad_embeddable(const QuadVal& v, long order);

// exact value of x as an element of Q(sqrt(c)); throws NotInSubfield
QuadVal cyclo_to_quad(const CycloElem& x, const Int& c);

}  // namespace fuscat
