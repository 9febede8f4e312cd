#pragma once

#include <utility>
#include <vector>

#include "fuscat/numbers.hpp"

namespace fuscat {

// Trial division; inputs here stay far below 2^64 so this is plenty.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 1) throw std::domain_error("factorize: argument must be positive");
    std::vector<std::pair<Int, int>> out;
    if (n.fits_ulong_p()) {
        unsigned long m = n.get_ui();
        for (unsigned long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
            if (m % p == 0) {
                int e = 0;
                while (m % p == 0) { m /= p; ++e; }
                out.emplace_back(Int(p), e);
            }
        }
        if (m > 1) out.emplace_back(Int(m), 1);
        return out;
    }
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// n = c * m^2 with c squarefree
inline std::pair<Int, Int> squarefree_part(const Int& n) {
    if (n < 1) throw std::domain_error("squarefree_part: argument must be positive");
    Int c = 1, m = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e % 2 == 1) c *= p;
        for (int i = 0; i < e / 2; ++i) m *= p;
    }
    return {c, m};
}

inline Int euler_phi(const Int& n) {
    if (n < 1) throw std::domain_error("euler_phi: argument must be positive");
    Int phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        Int pe = 1;
        for (int i = 0; i < e - 1; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

inline int moebius(const Int& n) {
    if (n < 1) throw std::domain_error("moebius: argument must be positive");
    int t = 0;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        ++t;
    }
    return (t % 2 == 0) ? 1 : -1;
}

inline bool is_squarefree(const Int& n) { return squarefree_part(n).first == n; }

inline int num_prime_factors(const Int& n) { return static_cast<int>(factorize(n).size()); }

inline long euler_phi_l(long n) { return to_long(euler_phi(Int(n))); }

}  // namespace fuscat
