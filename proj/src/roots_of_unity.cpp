#include "fuscat/roots_of_unity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <mutex>
#include <numeric>
#include <thread>

#include "fuscat/errors.hpp"
#include "fuscat/numtheory.hpp"

namespace fuscat {

long long bound_sqrt_general(const Int& a, const Int& b, const Int& d) {
    (void)a;
    if (d < 1 || !is_squarefree(d))
        throw HypothesisViolation("bound_sqrt_general: d must be a positive squarefree integer");
    return to_long(abs(b) * euler_phi(2 * d));
}

long long bound_sqrt2(const Int& a, const Int& b) { return to_long(abs(a) + 2 * abs(b)); }

long long bound_paired(const Int& a, const Int& b, const Int& c, const Int& d) {
    if (a < 0 || b < 0 || d < 0)
        throw HypothesisViolation("bound_paired: a, b, d must be nonnegative");
    if (c % 2 == 0 || c % 3 != 0 || !is_squarefree(c))
        throw HypothesisViolation("bound_paired: c must be odd, squarefree, divisible by 3");
    Int phi = euler_phi(c);
    int t = num_prime_factors(c);
    Int p;
    if (c % 4 == 3 && t % 2 == 1)
        p = b * phi + d * phi + b + 2 * a;
    else
        p = b * phi - 2 * b + 2 * a;
    return to_long(p);
}

namespace {

std::vector<long> units_mod(long Y) {
    if (Y == 1) return {0};
    std::vector<long> units;
    for (long k = 1; k < Y; ++k)
        if (std::gcd(k, Y) == 1) units.push_back(k);
    return units;
}

int epsilon_of(const Int& c) { return (c % 4 == 1) ? 0 : 1; }

CycloElem exponent_sum(long Y, const std::vector<long>& exps, int power) {
    CycloElem s(Y);
    for (long e : exps) s += CycloElem::root(Y, (e * power) % Y);
    return s;
}

}  // namespace

std::vector<long> sqrt_stabilizer(const Int& c, long Y) {
    std::vector<long> units = units_mod(Y);
    if (c <= 1 || Y % sqrt_conductor(c) != 0) return units;
    CycloElem s = sqrt_as_cyclo(c).embedded(Y);
    std::vector<long> stab;
    for (long k : units)
        if (s.galois(k) == s) stab.push_back(k);
    return stab;
}

std::vector<long> galois_orbit_exponents(const Int& c, long Y, long rep) {
    rep = ((rep % Y) + Y) % Y;
    if (Y > 1 && std::gcd(rep, Y) != 1)
        throw std::invalid_argument("galois_orbit_exponents: representative not primitive");
    std::vector<long> orbit;
    for (long k : sqrt_stabilizer(c, Y)) orbit.push_back((rep * k) % Y);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

OrbitReport orbit_sums(const Int& c, long Y) {
    if (c < 1 || !is_squarefree(c)) throw std::domain_error("orbit_sums: c must be squarefree >= 1");
    if (Y < 1) throw std::domain_error("orbit_sums: Y must be positive");
    OrbitReport rep;
    rep.c = c;
    rep.Y = Y;
    rep.epsilon = epsilon_of(c);
    rep.n = to_long((Int(1) << (2 * rep.epsilon)) * c);
    rep.L = to_long(lcm((Int(1) << (rep.epsilon + 2)) * c, Int(3)));
    std::vector<long> prims = (Y == 1) ? std::vector<long>{0} : units_mod(Y);
    std::vector<bool> seen(Y, false);
    for (long j : prims) {
        if (seen[j]) continue;
        std::vector<long> orbit = galois_orbit_exponents(c, Y, j);
        for (long e : orbit) seen[e] = true;
        GaloisOrbit o;
        o.order = Y;
        o.exponents = orbit;
        o.sum = cyclo_to_quad(exponent_sum(Y, orbit, 1), c);
        o.sum_sq = cyclo_to_quad(exponent_sum(Y, orbit, 2), c);
        rep.orbits.push_back(std::move(o));
    }
    return rep;
}

namespace {

// factor Y = v * u with v the (2 and primes-of-c)-part, u coprime to 2c
void split_uv(long Y, const Int& c, long& u, long& v) {
    v = 1;
    long rest = Y;
    auto absorb = [&](long p) {
        while (rest % p == 0) {
            v *= p;
            rest /= p;
        }
    };
    absorb(2);
    for (const auto& [p, e] : factorize(c))
        if (p != 2) absorb(to_long(p));
    u = rest;
}

long val2(long y) {
    long b = 0;
    while (y % 2 == 0) {
        y /= 2;
        ++b;
    }
    return b;
}

// multiply every element of the orbit by zeta_{den}^num
NormalOrbit twisted(const NormalOrbit& o, long num, long den) {
    long w = std::lcm(o.order, den);
    NormalOrbit out;
    out.order = w;
    for (long e : o.exponents)
        out.exponents.push_back((e * (w / o.order) + num * (w / den)) % w);
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

}  // namespace

std::vector<NormalOrbit> orbit_normalize(const std::vector<OrbitRef>& orbits, const Int& c,
                                         bool track_squares) {
    if (c < 1 || !is_squarefree(c))
        throw std::domain_error("orbit_normalize: c must be squarefree >= 1");
    long n = to_long((Int(1) << (2 * epsilon_of(c))) * c);
    std::vector<NormalOrbit> out;
    for (const OrbitRef& ref : orbits) {
        long Y = ref.Y;
        std::vector<long> exps = galois_orbit_exponents(c, Y, ref.rep);
        if (Y % n != 0) {
            // sqrt(c) not in Q(zeta_Y): full orbit of primitive Y-th roots,
            // the sums are 0 or +-1 (and +-2 for the squares)
            Rat s = exponent_sum(Y, exps, 1).as_rational();
            if (!track_squares) {
                if (s == 1) out.push_back({1, {0}});
                else if (s == -1) out.push_back({2, {1}});
                else if (s != 0) throw Error("orbit_normalize: unexpected full-orbit sum");
                continue;
            }
            Rat s2 = exponent_sum(Y, exps, 2).as_rational();
            if (s == 0 && s2 == 0) continue;
            if (s == 1 && s2 == 1) out.push_back({1, {0}});
            else if (s == -1 && s2 == -1) out.push_back({3, {1, 2}});
            else if (s == 1 && s2 == -1) out.push_back({6, {1, 5}});
            else if (s == -1 && s2 == 1) out.push_back({2, {1}});
            else if (s == 0 && s2 == 2) out.push_back({12, {1, 5, 7, 11}});
            else if (s == 0 && s2 == -2) out.push_back({4, {1, 3}});
            else throw Error("orbit_normalize: unexpected full-orbit sums");
            continue;
        }
        // sqrt(c) in Q(zeta_Y). An orbit dies when multiplying by zeta_k
        // permutes it for some k acting trivially on Q(sqrt c): k an odd prime
        // of c appearing squared in Y, or k = 2 (k = 4 with squares tracked)
        // when the 2-part of Y is deep enough that zeta_k is absorbed.
        long u, v;
        split_uv(Y, c, u, v);
        bool drop = false;
        for (const auto& [pp, ee] : factorize(Int(v)))
            if (pp != 2 && ee > 1) drop = true;
        long b2 = val2(v);
        long floor2 = track_squares ? 3 : 2;           // zeta_k primitivity
        long need2 = val2(n) + (track_squares ? 2 : 1);  // n | Y/k
        if (b2 >= std::max(floor2, need2)) drop = true;
        if (drop) continue;
        if (u == 1) {
            out.push_back({Y, exps});
            continue;
        }
        // orbit = (all primitive u-th roots) x (sub-orbit mod v); the u-part
        // contributes its Moebius sign
        int mu = moebius(Int(u));
        if (mu == 0) continue;
        NormalOrbit base{v, galois_orbit_exponents(c, v, ref.rep % v)};
        if (mu == 1) {
            out.push_back(base);
        } else if (!track_squares) {
            if (v % 2 == 0) out.push_back(twisted(base, v / 2, v));  // -1 absorbed
            else out.push_back(twisted(base, 1, 2));
        } else {
            out.push_back(twisted(base, 1, 3));  // omega O' + omega^2 O'
            out.push_back(twisted(base, 2, 3));
        }
    }
    return out;
}

CycloElem orbit_elem_sum(const NormalOrbit& o, long ambient) {
    long w = std::lcm(o.order, ambient);
    CycloElem s(w);
    for (long e : o.exponents) s += CycloElem::root(o.order, e).embedded(w);
    return s;
}

CycloElem orbit_elem_sum_sq(const NormalOrbit& o, long ambient) {
    long w = std::lcm(o.order, ambient);
    CycloElem s(w);
    for (long e : o.exponents) s += CycloElem::root(o.order, (2 * e) % o.order).embedded(w);
    return s;
}

namespace {

struct SearchSetup {
    long n = 1;
    bool paired = false;
    CycloElem target{1};
    CycloElem target2{1};
    std::complex<double> tf, t2f;
    std::vector<std::complex<double>> rf;
};

std::complex<double> float_of(const QuadVal& v) {
    return {v.a().get_d() + v.b().get_d() * std::sqrt(v.c().get_d()), 0.0};
}

// exact check of an exponent-count multiset against the targets
bool leaf_matches(const SearchSetup& s, const std::vector<int>& counts) {
    std::vector<Rat> cs(s.n, Rat(0));
    for (long j = 0; j < s.n; ++j)
        if (counts[j] != 0) cs[j] = counts[j];
    if (!(CycloElem::from_coeffs(s.n, std::move(cs)) == s.target)) return false;
    if (!s.paired) return true;
    std::vector<Rat> sq(s.n, Rat(0));
    for (long j = 0; j < s.n; ++j)
        if (counts[j] != 0) sq[(2 * j) % s.n] += counts[j];
    return CycloElem::from_coeffs(s.n, std::move(sq)) == s.target2;
}

bool dfs(const SearchSetup& s, int remaining, long min_exp, std::complex<double> acc,
         std::complex<double> acc2, std::vector<int>& counts, std::vector<long>& stack) {
    if (remaining == 0) {
        if (std::abs(s.tf - acc) > 1e-6) return false;
        if (s.paired && std::abs(s.t2f - acc2) > 1e-6) return false;
        return leaf_matches(s, counts);
    }
    double slack = static_cast<double>(remaining) + 1e-9;
    if (std::abs(s.tf - acc) > slack) return false;
    if (s.paired && std::abs(s.t2f - acc2) > slack) return false;
    for (long j = min_exp; j < s.n; ++j) {
        counts[j] += 1;
        stack.push_back(j);
        if (dfs(s, remaining - 1, j, acc + s.rf[j], acc2 + s.rf[(2 * j) % s.n], counts, stack))
            return true;
        stack.pop_back();
        counts[j] -= 1;
    }
    return false;
}

MinRootsResult run_search(const SearchSetup& s, long max_order, int max_count, int workers) {
    MinRootsResult res;
    res.max_order = max_order;
    res.max_count = max_count;
    if (workers < 1) workers = 1;
    for (int size = 0; size <= max_count; ++size) {
        std::vector<long> found;
        if (size == 0) {
            std::vector<int> counts(s.n, 0);
            std::vector<long> stack;
            if (dfs(s, 0, 0, {0, 0}, {0, 0}, counts, stack)) found = stack;
            else continue;
        } else if (workers == 1) {
            std::vector<int> counts(s.n, 0);
            std::vector<long> stack;
            if (!dfs(s, size, 0, {0, 0}, {0, 0}, counts, stack)) continue;
            found = stack;
        } else {
            // shard on the first multiset element; the smallest first
            // exponent with a hit gives the lexicographically-first witness
            std::vector<std::vector<long>> hits(s.n);
            std::vector<char> hit(s.n, 0);
            std::atomic<long> next{0};
            auto task = [&] {
                for (long j = next.fetch_add(1); j < s.n; j = next.fetch_add(1)) {
                    std::vector<int> counts(s.n, 0);
                    std::vector<long> stack;
                    counts[j] = 1;
                    stack.push_back(j);
                    if (dfs(s, size - 1, j, s.rf[j], s.rf[(2 * j) % s.n], counts, stack)) {
                        hits[j] = stack;
                        hit[j] = 1;
                    }
                }
            };
            std::vector<std::thread> pool;
            for (int w = 1; w < workers; ++w) pool.emplace_back(task);
            task();
            for (auto& t : pool) t.join();
            for (long j = 0; j < s.n && found.empty(); ++j)
                if (hit[j]) found = hits[j];
            if (found.empty()) continue;
        }
        res.exceeded = false;
        res.minimum = size;
        for (long j : found) {
            long g = std::gcd(j, s.n);
            res.witness.emplace_back(j == 0 ? 1 : s.n / g, j == 0 ? 0 : j / g);
        }
        return res;
    }
    res.exceeded = true;
    res.minimum = -1;
    return res;
}

MinRootsResult field_miss(long max_order, int max_count) {
    MinRootsResult res;
    res.exceeded = true;
    res.minimum = -1;
    res.max_order = max_order;
    res.max_count = max_count;
    return res;
}

}  // namespace

MinRootsResult minroots_bruteforce(const QuadVal& target, long max_order, int max_count,
                                   int workers) {
    if (!quad_embeddable(target, max_order)) return field_miss(max_order, max_count);
    SearchSetup s;
    s.n = max_order;
    s.target = embed_quad(target, max_order);
    s.tf = float_of(target);
    for (long j = 0; j < max_order; ++j) s.rf.push_back(std::polar(1.0, 2.0 * M_PI * j / max_order));
    return run_search(s, max_order, max_count, workers);
}

MinRootsResult minroots_paired_bruteforce(const QuadVal& target1, const QuadVal& target2,
                                          long max_order, int max_count, int workers) {
    if (!quad_embeddable(target1, max_order) || !quad_embeddable(target2, max_order))
        return field_miss(max_order, max_count);
    SearchSetup s;
    s.n = max_order;
    s.paired = true;
    s.target = embed_quad(target1, max_order);
    s.target2 = embed_quad(target2, max_order);
    s.tf = float_of(target1);
    s.t2f = float_of(target2);
    for (long j = 0; j < max_order; ++j) s.rf.push_back(std::polar(1.0, 2.0 * M_PI * j / max_order));
    return run_search(s, max_order, max_count, workers);
}

}  // namespace fuscat
