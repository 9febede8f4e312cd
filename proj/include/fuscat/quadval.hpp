#pragma once

#include <compare>
#include <string>

#include "fuscat/numbers.hpp"

namespace fuscat {

// Exact element a + b*sqrt(c) of a real quadratic field, c squarefree >= 0.
// Canonical form: b == 0 implies c == 0, and c is never 1 (folded into a),
// so value equality is componentwise equality.
class QuadVal {
public:
    QuadVal() : a_(0), b_(0), c_(0) {}
    QuadVal(long v) : a_(v), b_(0), c_(0) {}  // NOLINT(google-explicit-constructor)
    QuadVal(const Rat& v) : a_(v), b_(0), c_(0) {}  // NOLINT(google-explicit-constructor)
    QuadVal(const Rat& a, const Rat& b, const Int& radicand);

    static QuadVal sqrt_of(const Int& n);  // exact sqrt of a nonnegative integer

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Int& c() const { return c_; }

    bool is_rational() const { return c_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    const Rat& as_rational() const;  // throws if irrational

    QuadVal operator+(const QuadVal& o) const;
    QuadVal operator-(const QuadVal& o) const;
    QuadVal operator*(const QuadVal& o) const;
    QuadVal operator/(const QuadVal& o) const;
    QuadVal operator-() const { return QuadVal(-a_, -b_, c_); }
    QuadVal conj() const { return QuadVal(a_, -b_, c_); }

    QuadVal& operator+=(const QuadVal& o) { return *this = *this + o; }
    QuadVal& operator-=(const QuadVal& o) { return *this = *this - o; }
    QuadVal& operator*=(const QuadVal& o) { return *this = *this * o; }

    bool operator==(const QuadVal& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }
    bool operator!=(const QuadVal& o) const { return !(*this == o); }

    // Exact sign of the real number, decided by rational case analysis only.
    int sign() const;

    QuadVal inverse() const;
    Rat norm() const { return a_ * a_ - b_ * b_ * Rat(c_); }  // a^2 - b^2 c

    std::string str() const;

private:
    Rat a_, b_;
    Int c_;

    void canonicalize(const Int& radicand);
};

// Exact total order. Same-field comparisons are purely rational; distinct
// irrational radicands fall back to interval refinement (64..256 bits), which
// always separates since the values cannot be equal.
int compare(const QuadVal& x, const QuadVal& y);

// Rational enclosure of sqrt(c) with 2^-bits width; used by compare and by
// the randomized sign cross-checks.
void sqrt_bounds(const Int& c, unsigned bits, Rat& lo, Rat& hi);

}  // namespace fuscat
