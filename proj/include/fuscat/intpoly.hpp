#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fuscat/numbers.hpp"
#include "fuscat/quadval.hpp"

namespace fuscat {

// Integer polynomial, coefficients lowest degree first, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(const Int& v);
    static IntPoly monomial(int degree, const Int& lead = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    QuadVal eval(const QuadVal& x) const;
    IntPoly derivative() const;

    // long division by a monic divisor; exact over the integers
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

    std::string str() const;  // "t^2-2*t-3" style, highest degree first

private:
    std::vector<Int> c_;
    void trim();
};

// n-th cyclotomic polynomial, memoized per thread
const IntPoly& cyclotomic_poly(long n);

// All rational roots of a monic integer polynomial, with multiplicity.
std::vector<Int> integer_roots(const IntPoly& p);

// Factorization of a monic quartic with a supplied integer double root:
// p = (t-gamma)^2 (t^2 - alpha t + beta). Throws NotADoubleRoot unless
// p(gamma) = p'(gamma) = 0.
struct QuadraticFactor {
    Int alpha, beta;
    bool real_roots;                      // discriminant >= 0
    std::pair<QuadVal, QuadVal> roots();  // (alpha +- sqrt(alpha^2-4 beta))/2
};
QuadraticFactor factor_with_known_double_root(const IntPoly& p, const Int& gamma);

// Exact roots of a monic polynomial of degree <= 4 over Q-bar, restricted to
// factors of degree <= 2 over Q. Throws EigenvalueDegreeTooHigh when the
// polynomial has an irreducible factor of degree > 2.
struct ExactRoots {
    std::vector<QuadVal> real;  // with multiplicity
    int nonreal_pairs = 0;      // conjugate pairs from negative discriminants
};
ExactRoots exact_roots(const IntPoly& p);

}  // namespace fuscat
