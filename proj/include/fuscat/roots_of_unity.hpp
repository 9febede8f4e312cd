#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fuscat/cyclotomic.hpp"
#include "fuscat/numbers.hpp"
#include "fuscat/quadval.hpp"

namespace fuscat {

// Minimum number of roots of unity needed to write a + b*sqrt(d): |b| phi(2d).
long long bound_sqrt_general(const Int& a, const Int& b, const Int& d);

// Sharper bound in Q(sqrt 2): |a| + 2|b|.
long long bound_sqrt2(const Int& a, const Int& b);

// Paired bound P(a, b, c, d) for sum = -a - b sqrt(c), sum of squares =
// -a - d sqrt(c); c odd squarefree with 3 | c, a, b, d >= 0.
long long bound_paired(const Int& a, const Int& b, const Int& c, const Int& d);

// Subgroup of (Z/Y)* fixing sqrt(c); the full unit group when sqrt(c) is not
// in Q(zeta_Y).
std::vector<long> sqrt_stabilizer(const Int& c, long Y);

// Orbit of exponent rep (coprime to Y) under that subgroup.
std::vector<long> galois_orbit_exponents(const Int& c, long Y, long rep);

struct GaloisOrbit {
    long order;
    std::vector<long> exponents;
    QuadVal sum;
    QuadVal sum_sq;
};

struct OrbitReport {
    Int c;
    long Y;
    int epsilon;  // 0 when c = 1 mod 4, else 1
    long n;       // 2^{2 epsilon} c
    long L;       // lcm(2^{epsilon+2} c, 3)
    std::vector<GaloisOrbit> orbits;
};

// Partition of the primitive Y-th roots of unity into orbits under
// Gal(Q(zeta_Y)/Q(sqrt c)), with exact sums and sums of squares.
OrbitReport orbit_sums(const Int& c, long Y);

struct OrbitRef {
    long Y;    // primitive order
    long rep;  // representative exponent, coprime to Y
};

struct NormalOrbit {
    long order;
    std::vector<long> exponents;
};

// Rewrites a Galois-invariant multiset of orbits into one supported on small
// orders (dividing 2^{epsilon+1} c, or L when squares are tracked), exactly
// preserving the total sum (and total sum of squares) and never increasing
// the number of roots.
std::vector<NormalOrbit> orbit_normalize(const std::vector<OrbitRef>& orbits, const Int& c,
                                         bool track_squares);

CycloElem orbit_elem_sum(const NormalOrbit& o, long ambient);
CycloElem orbit_elem_sum_sq(const NormalOrbit& o, long ambient);

struct MinRootsResult {
    bool exceeded;  // no multiset of size <= max_count matches within the field
    int minimum;    // valid when !exceeded
    std::vector<std::pair<long, long>> witness;  // (order, exponent), reduced
    long max_order;
    int max_count;
};

// Exhaustive minimum over multisets of roots of unity of order dividing
// max_order, exact sums; deterministic lexicographically-first witness.
MinRootsResult minroots_bruteforce(const QuadVal& target, long max_order, int max_count,
                                   int workers = 1);

// Same, with the sum and the sum of squares both pinned.
MinRootsResult minroots_paired_bruteforce(const QuadVal& target1, const QuadVal& target2,
                                          long max_order, int max_count, int workers = 1);

}  // namespace fuscat
