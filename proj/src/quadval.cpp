#include "fuscat/quadval.hpp"

#include "fuscat/errors.hpp"
#include "fuscat/numtheory.hpp"

namespace fuscat {

QuadVal::QuadVal(const Rat& a, const Rat& b, const Int& radicand) : a_(a), b_(b), c_(0) {
    if (radicand < 0) throw std::domain_error("QuadVal: negative radicand");
    canonicalize(radicand);
}

void QuadVal::canonicalize(const Int& radicand) {
    if (b_ == 0 || radicand == 0) {
        b_ = 0;
        c_ = 0;
        return;
    }
    auto [c, m] = squarefree_part(radicand);
    b_ *= Rat(m);
    if (c == 1) {
        a_ += b_;
        b_ = 0;
        c_ = 0;
    } else {
        c_ = c;
    }
}

QuadVal QuadVal::sqrt_of(const Int& n) { return QuadVal(Rat(0), Rat(1), n); }

const Rat& QuadVal::as_rational() const {
    if (!is_rational()) throw Error("QuadVal::as_rational: value is irrational");
    return a_;
}

namespace {
// common radicand for a binary op, or throw
Int merge_radicand(const QuadVal& x, const QuadVal& y) {
    if (x.c() == 0) return y.c();
    if (y.c() == 0 || x.c() == y.c()) return x.c();
    throw MixedRadicands("QuadVal: operands lie in distinct quadratic fields (sqrt" +
                         x.c().get_str() + " vs sqrt" + y.c().get_str() + ")");
}
}  // namespace

QuadVal QuadVal::operator+(const QuadVal& o) const {
    Int c = merge_radicand(*this, o);
    return QuadVal(a_ + o.a_, b_ + o.b_, c);
}

QuadVal QuadVal::operator-(const QuadVal& o) const {
    Int c = merge_radicand(*this, o);
    return QuadVal(a_ - o.a_, b_ - o.b_, c);
}

QuadVal QuadVal::operator*(const QuadVal& o) const {
    Int c = merge_radicand(*this, o);
    Rat rc(c);
    return QuadVal(a_ * o.a_ + b_ * o.b_ * rc, a_ * o.b_ + b_ * o.a_, c);
}

QuadVal QuadVal::inverse() const {
    if (is_zero()) throw DivisionByZero("QuadVal: division by zero");
    Rat n = norm();
    // norm vanishes only at zero for squarefree c
    return QuadVal(a_ / n, -b_ / n, c_);
}

QuadVal QuadVal::operator/(const QuadVal& o) const {
    Int c = merge_radicand(*this, o);
    (void)c;
    return *this * o.inverse();
}

int QuadVal::sign() const {
    if (b_ == 0) return sign_of(a_);
    if (a_ == 0) return sign_of(b_);
    int sa = sign_of(a_), sb = sign_of(b_);
    if (sa == sb) return sa;
    // a and b*sqrt(c) pull in opposite directions: compare a^2 with b^2 c
    Rat a2 = a_ * a_;
    Rat b2c = b_ * b_ * Rat(c_);
    if (a2 > b2c) return sa;
    if (a2 < b2c) return sb;
    // a^2 = b^2 c forces c to be a rational square, impossible in canonical form
    throw Error("QuadVal::sign: non-canonical value");
}

std::string QuadVal::str() const {
    if (is_rational()) return rat_str(a_);
    std::string out;
    bool have_a = (a_ != 0);
    if (have_a) out += rat_str(a_);
    if (b_ == 1) {
        if (have_a) out += "+";
    } else if (b_ == -1) {
        out += "-";
    } else {
        if (have_a && b_ > 0) out += "+";
        out += rat_str(b_) + "*";
    }
    out += "sqrt(" + c_.get_str() + ")";
    return out;
}

void sqrt_bounds(const Int& c, unsigned bits, Rat& lo, Rat& hi) {
    if (c < 0) throw std::domain_error("sqrt_bounds: negative radicand");
    Int scale = Int(1) << bits;
    Int s = isqrt(c * scale * scale);
    lo = make_rat(s, scale);
    hi = make_rat(s + 1, scale);
}

namespace {
// interval endpoints of a + b*sqrt(c) at the given precision
void interval_of(const QuadVal& v, unsigned bits, Rat& lo, Rat& hi) {
    if (v.is_rational()) {
        lo = hi = v.a();
        return;
    }
    Rat slo, shi;
    sqrt_bounds(v.c(), bits, slo, shi);
    if (v.b() > 0) {
        lo = v.a() + v.b() * slo;
        hi = v.a() + v.b() * shi;
    } else {
        lo = v.a() + v.b() * shi;
        hi = v.a() + v.b() * slo;
    }
}
}  // namespace

int compare(const QuadVal& x, const QuadVal& y) {
    if (x.c() == y.c() || x.is_rational() || y.is_rational()) return (x - y).sign();
    for (unsigned bits : {64u, 128u, 256u}) {
        Rat xlo, xhi, ylo, yhi;
        interval_of(x, bits, xlo, xhi);
        interval_of(y, bits, ylo, yhi);
        if (xlo > yhi) return 1;
        if (xhi < ylo) return -1;
    }
    // distinct squarefree radicands with b != 0 can never be equal
    throw Error("compare(QuadVal): intervals inconclusive at 256 bits");
}

}  // namespace fuscat
