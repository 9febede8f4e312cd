#include "fuscat/matrix.hpp"

#include "fuscat/errors.hpp"

namespace fuscat {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMatrix: size mismatch");
    IntMatrix r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMatrix: size mismatch");
    IntMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::scaled(const Int& k) const {
    IntMatrix r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * k;
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : e_)
        if (v != 0) return false;
    return true;
}

Int IntMatrix::trace() const {
    Int t(0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

IntPoly char_poly(const IntMatrix& m) {
    int n = m.size();
    std::vector<Int> coeffs(n + 1, Int(0));
    coeffs[n] = 1;
    IntMatrix acc = IntMatrix::identity(n);  // N_0 = I
    for (int k = 1; k <= n; ++k) {
        acc = m * acc;
        Int tr = acc.trace();
        if (tr % k != 0) throw Error("char_poly: non-integral trace step");
        Int ck = -tr / k;
        coeffs[n - k] = ck;
        if (k < n) {
            for (int i = 0; i < n; ++i) acc.at(i, i) += ck;
        }
    }
    return IntPoly(std::move(coeffs));
}

Int det(const IntMatrix& m) {
    // det(tI - M) at t = 0 is (-1)^n det M
    Int p0 = char_poly(m).eval(Int(0));
    return (m.size() % 2 == 0) ? p0 : -p0;
}

}  // namespace fuscat
