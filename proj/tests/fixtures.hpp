#pragma once

#include <array>
#include <vector>

#include "fuscat/cyclotomic.hpp"
#include "fuscat/errors.hpp"
#include "fuscat/fusion_ring.hpp"

namespace fuscat::testing {

// The rank-4 ring with X^2 = Y + 2Z, Y^2 = 1 + 2X + 4Y + 2Z, Z^2 = 2X + Y,
// XY = 2X + 2Y + Z, YZ = X + 2Y + 2Z, XZ = 1 + 2Y.
inline FusionRing table1_ring() {
    auto idx = [](int i, int j, int k) { return (i * 4 + j) * 4 + k; };
    std::vector<long long> t(64, 0);
    auto set2 = [&](int i, int j, std::array<long long, 4> v) {
        for (int k = 0; k < 4; ++k) {
            t[idx(i, j, k)] = v[k];
            t[idx(j, i, k)] = v[k];
        }
    };
    for (int j = 0; j < 4; ++j) {
        t[idx(0, j, j)] = 1;
        t[idx(j, 0, j)] = 1;
    }
    set2(1, 1, {0, 0, 1, 2});
    set2(1, 2, {0, 2, 2, 1});
    set2(1, 3, {1, 0, 2, 0});
    set2(2, 2, {1, 2, 4, 2});
    set2(2, 3, {0, 1, 2, 2});
    set2(3, 3, {0, 2, 1, 0});
    return FusionRing(4, {0, 3, 2, 1}, std::move(t), {"1", "X", "Y", "Z"});
}

// Tensor-product ring of the A4 irreducible characters, computed from the
// character table over Q(omega); an oracle independent of the family builder.
inline FusionRing a4_character_ring() {
    const long sizes[4] = {1, 3, 4, 4};
    CycloElem one = CycloElem::from_rational(3, Rat(1));
    CycloElem w = CycloElem::root(3, 1);
    CycloElem w2 = CycloElem::root(3, 2);
    CycloElem three = CycloElem::from_rational(3, Rat(3));
    CycloElem neg1 = CycloElem::from_rational(3, Rat(-1));
    CycloElem zero(3);
    std::array<std::array<CycloElem, 4>, 4> chi = {{
        {one, one, one, one},
        {one, one, w, w2},
        {one, one, w2, w},
        {three, neg1, zero, zero},
    }};
    auto inner = [&](int i, int j, int k) {
        CycloElem acc(3);
        for (int g = 0; g < 4; ++g) {
            CycloElem term = chi[i][g] * chi[j][g] * chi[k][g].galois(2);
            acc += term.scaled(Rat(sizes[g]));
        }
        Rat v = acc.as_rational() / 12;
        if (!is_integer(v) || v < 0) throw Error("a4_character_ring: non-integral multiplicity");
        return static_cast<long long>(v.get_num().get_si());
    };
    std::vector<long long> t(64, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) t[(i * 4 + j) * 4 + k] = inner(i, j, k);
    // duality pairs a character with its complex conjugate
    std::vector<int> dual(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            bool same = true;
            for (int g = 0; g < 4; ++g)
                if (!(chi[i][g].galois(2) == chi[j][g])) same = false;
            if (same) dual[i] = j;
        }
    return FusionRing(4, dual, std::move(t));
}

// Group ring of Z/4 with duality g -> g^{-1}.
inline FusionRing z4_group_ring() {
    std::vector<long long> t(64, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[(i * 4 + j) * 4 + ((i + j) % 4)] = 1;
    return FusionRing(4, {0, 3, 2, 1}, std::move(t));
}

}  // namespace fuscat::testing
