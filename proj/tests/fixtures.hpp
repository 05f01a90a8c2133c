#pragma once

#include <random>
#include <set>
#include <vector>

#include "kpar/factor_set.hpp"
#include "kpar/group.hpp"
#include "kpar/idempotent.hpp"

namespace fixtures {

using namespace kpar;

// Bilinear 2-cocycle on the Klein group: with components g = (g1, g2),
// sigma(g, h) = lambda^(g2 * h1). The cocycle identity on C2 x C2 needs
// lambda^2 = 1, so lambda = -1 is the nontrivial choice. Total but not
// normalized: sigma(pq, pq) = -1. `g` must be the klein builtin
// (index = g1 + 2*g2, table is xor).
inline FactorSet bilinear_klein(const FiniteGroup& g, Field f) {
    FactorSet s(g, f);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            int e = ((a >> 1) & 1) * (b & 1);
            s.set(a, b, FieldScalar::from_int(f, e ? -1 : 1));
        }
    }
    return s;
}

// The same formula with lambda = 2 over GF(7) is NOT a cocycle on the
// Klein group (2 has order 3 mod 7); it passes the basic table identities
// but fails the membership oracle. Kept as a negative control.
inline FactorSet pseudo_bilinear_klein(const FiniteGroup& g, Field f) {
    FactorSet s(g, f);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            int e = ((a >> 1) & 1) * (b & 1);
            s.set(a, b, FieldScalar::from_int(f, e ? 2 : 1));
        }
    }
    return s;
}

// C3 x C3 as a raw table; index = g1 + 3*g2.
inline FiniteGroup c3_times_c3() {
    std::vector<std::vector<int>> t(9, std::vector<int>(9));
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            t[i][j] = (i % 3 + j % 3) % 3 + 3 * ((i / 3 + j / 3) % 3);
    return FiniteGroup::from_table(std::move(t));
}

// Bilinear cocycle on C3 x C3 over GF(7) with lambda = 2 (a cube root of
// unity mod 7), normalized by the coboundary of rho(g) = lambda^(2 g1 g2):
// sigma'(g, g^-1) = 1 for every g.
inline FactorSet normalized_bilinear_c3c3(const FiniteGroup& g, Field f) {
    auto lam_pow = [&](long long e) {
        long long r = ((e % 3) + 3) % 3;
        return FieldScalar::from_int(f, r == 0 ? 1 : r == 1 ? 2 : 4);
    };
    auto rho = [&](int i) { return lam_pow(2 * (i % 3) * (i / 3)); };
    FactorSet out(g, f);
    for (int a = 0; a < 9; ++a) {
        for (int b = 0; b < 9; ++b) {
            FieldScalar base = lam_pow((a / 3) * (b % 3));
            out.set(a, b, base * rho(a) * rho(b) * rho(g.mul(a, b)).inv());
        }
    }
    return out;
}

// sigma on C2 with sigma(1,a) = 1 but sigma(a,1) = 0: breaks the
// sigma(g,1) pattern identity outright.
inline FactorSet broken_pattern_c2(const FiniteGroup& c2, Field f) {
    FactorSet s = FactorSet::ones(c2, f);
    s.set(1, 0, FieldScalar::zero(f));
    return s;
}

// sigma on C2 with sigma(a,a) = 1 and the whole sigma(a,1) pattern zero:
// passes the basic table identities, fails the membership oracle.
inline FactorSet fake_member_c2(const FiniteGroup& c2, Field f) {
    FactorSet s = FactorSet::ones(c2, f);
    s.set(1, 0, FieldScalar::zero(f));
    s.set(0, 1, FieldScalar::zero(f));
    return s;
}

// sigma on C2 with sigma(a,a) = 0 but sigma(a,1) = 1.
inline FactorSet zero_diagonal_c2(const FiniteGroup& c2, Field f) {
    FactorSet s = FactorSet::ones(c2, f);
    s.set(1, 1, FieldScalar::zero(f));
    return s;
}

// Total sigma on C4 that breaks the cocycle identity at one entry.
inline FactorSet broken_cocycle_c4(const FiniteGroup& c4, Field f) {
    FactorSet s = FactorSet::ones(c4, f);
    s.set(1, 1, FieldScalar::from_int(f, 3));
    return s;
}

inline std::set<GPair> random_general_pairs(const FiniteGroup& g, std::mt19937_64& rng,
                                            int tries) {
    std::set<GPair> t;
    int n = g.order();
    for (int k = 0; k < tries; ++k) {
        int x = static_cast<int>(rng() % n);
        int y = static_cast<int>(rng() % n);
        if (x == 0 && y == 0) continue;
        t.insert({x, y});
        t.insert({g.inv(y), g.inv(x)});
    }
    return t;
}

inline std::vector<Mask> all_subgroups(const FiniteGroup& g) {
    std::vector<Mask> out;
    Mask full = g.full_mask();
    for (Mask m = 1; m <= full; m += 2) {
        if (g.is_subgroup(m)) out.push_back(m);
    }
    return out;
}

} // namespace fixtures
