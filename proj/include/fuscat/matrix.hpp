#pragma once

#include <vector>

#include "fuscat/intpoly.hpp"
#include "fuscat/numbers.hpp"

namespace fuscat {

// Dense matrix over Z.
class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, Int(0)) {}
    static IntMatrix identity(int n);

    int size() const { return n_; }
    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix scaled(const Int& k) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool is_zero() const;

    Int trace() const;

private:
    int n_;
    std::vector<Int> e_;
};

// Exact monic characteristic polynomial det(tI - M) via the
// Faddeev-LeVerrier recurrence over rationals (coefficients are integers).
IntPoly char_poly(const IntMatrix& m);

Int det(const IntMatrix& m);

}  // namespace fuscat
