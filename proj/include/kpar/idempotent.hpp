#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "kpar/factor_set.hpp"
#include "kpar/membership.hpp"

namespace kpar {

using GPair = std::pair<int, int>;

/// The six-element symmetry orbit of a pair:
/// {(a,b), (b^-1 a^-1, a), (b, b^-1 a^-1), (b^-1, a^-1), (a^-1, ab), (ab, b^-1)}.
inline std::set<GPair> orbit_c(const FiniteGroup& G, int a, int b) {
    int ai = G.inv(a), bi = G.inv(b);
    int ab = G.mul(a, b), biai = G.inv(ab);
    return {{a, b}, {biai, a}, {b, biai}, {bi, ai}, {ai, ab}, {ab, bi}};
}

/// Generator data for idempotent factor sets.
struct IdempotentGenerator {
    enum class Kind { diagonal, lateral, general };
    Kind kind = Kind::general;
    Mask diag = 0;             // diagonal: symmetric subset avoiding 1
    std::set<GPair> pairs;     // lateral / general pair data
};

namespace detail {

inline void require_diagonal(const FiniteGroup& G, Mask s) {
    if (mask_contains(s, 0)) throw InvalidGenerator("diagonal set contains the identity");
    for (int g : mask_elements(s)) {
        if (!mask_contains(s, G.inv(g)))
            throw InvalidGenerator("diagonal set is not closed under inverses");
    }
}

inline void require_lateral(const FiniteGroup& G, const std::set<GPair>& w) {
    for (int z = 0; z < G.order(); ++z) {
        for (const auto& p : orbit_c(G, z, G.inv(z))) {
            if (w.count(p))
                throw InvalidGenerator("pair set meets an inverse-pair orbit");
        }
    }
}

inline void require_general(const FiniteGroup& G, const std::set<GPair>& t) {
    if (t.count({0, 0})) throw InvalidGenerator("(1,1) cannot be a zero");
    for (const auto& [x, y] : t) {
        if (!t.count({G.inv(y), G.inv(x)}))
            throw InvalidGenerator("pair set is not inversion-symmetric");
    }
}

inline void assert_member(const FactorSet& s, const char* what) {
    if (!validate_membership(s).member)
        throw Error(std::string("constructed factor set failed the membership oracle: ") + what);
}

} // namespace detail

/// Diagonal factor set of S: zero exactly where {x, y, xy} meets S.
inline FactorSet diagonal(const FiniteGroup& G, Field field, Mask s, bool check = true) {
    detail::require_diagonal(G, s);
    FactorSet out(G, field);
    int n = G.order();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            bool zero = mask_contains(s, x) || mask_contains(s, y) ||
                        mask_contains(s, G.mul(x, y));
            out.set(x, y, zero ? FieldScalar::zero(field) : FieldScalar::one(field));
        }
    }
    if (check) detail::assert_member(out, "diagonal");
    return out;
}

/// Lateral factor set of W: zero exactly where the pair orbit meets W.
inline FactorSet lateral(const FiniteGroup& G, Field field, const std::set<GPair>& w,
                         bool check = true) {
    detail::require_lateral(G, w);
    FactorSet out(G, field);
    int n = G.order();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            bool zero = false;
            for (const auto& p : orbit_c(G, x, y)) {
                if (w.count(p)) {
                    zero = true;
                    break;
                }
            }
            out.set(x, y, zero ? FieldScalar::zero(field) : FieldScalar::one(field));
        }
    }
    if (check) detail::assert_member(out, "lateral");
    return out;
}

/// Splits T into its inverse-pair part T0 (consumed diagonally) and the
/// remaining pairs T1 (consumed laterally), then multiplies the generated
/// factor sets.
inline FactorSet general(const FiniteGroup& G, Field field, const std::set<GPair>& t,
                         bool check = true) {
    detail::require_general(G, t);
    Mask t0 = 0;
    for (int x = 1; x < G.order(); ++x) {
        for (const auto& p : orbit_c(G, x, G.inv(x))) {
            if (t.count(p)) {
                // sigma(g,g^-1) = sigma(g^-1,g) forces the mirror zero, so
                // the diagonal set is taken inverse-closed.
                t0 |= Mask(1) << x;
                t0 |= Mask(1) << G.inv(x);
                break;
            }
        }
    }
    std::set<GPair> t1;
    for (const auto& [x, y] : t) {
        if (x != 0 && y != 0 && x != G.inv(y)) t1.insert({x, y});
    }
    FactorSet out = pm_product(diagonal(G, field, t0, false), lateral(G, field, t1, false));
    if (check) detail::assert_member(out, "general");
    return out;
}

inline std::set<GPair> null_set(const FactorSet& s) {
    std::set<GPair> out;
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            if (s.at(x, y).is_zero()) out.insert({x, y});
    return out;
}

struct CanonicalDecomposition {
    FactorSet delta;  // diagonal part
    FactorSet lambda; // lateral part
    Mask diag_set;
    std::set<GPair> lateral_set;
};

/// Unique diagonal/lateral splitting of an idempotent factor set:
/// sigma = delta * lambda, delta(x,y) = 0 forces lambda(x,y) = 1, and the
/// zero loci partition Null(sigma).
inline CanonicalDecomposition canonical_decomposition(const FactorSet& sigma) {
    if (!sigma.is_idempotent()) throw NotIdempotent();
    const FiniteGroup& G = sigma.group();
    auto zeros = null_set(sigma);

    Mask s = 0;
    for (int x = 1; x < G.order(); ++x) {
        for (const auto& p : orbit_c(G, x, G.inv(x))) {
            if (zeros.count(p)) {
                s |= Mask(1) << x;
                break;
            }
        }
    }
    FactorSet delta = diagonal(G, sigma.field(), s, false);

    std::set<GPair> wbar;
    for (const auto& [x, y] : zeros) {
        if (x == 0 || y == 0 || x == G.inv(y)) continue;
        if (delta.at(x, y).is_one()) wbar.insert({x, y});
    }
    FactorSet lambda = lateral(G, sigma.field(), wbar, false);

    if (!(pm_product(delta, lambda) == sigma))
        throw Error("canonical decomposition does not reproduce sigma");
    for (int x = 0; x < G.order(); ++x) {
        for (int y = 0; y < G.order(); ++y) {
            if (delta.at(x, y).is_zero() && !lambda.at(x, y).is_one())
                throw Error("a zero of delta is not matched by a one of lambda");
        }
    }
    auto dz = null_set(delta), lz = null_set(lambda);
    std::set<GPair> meet;
    std::set_intersection(dz.begin(), dz.end(), lz.begin(), lz.end(),
                          std::inserter(meet, meet.begin()));
    if (!meet.empty()) throw Error("zero loci of the decomposition overlap");
    std::set<GPair> join;
    std::set_union(dz.begin(), dz.end(), lz.begin(), lz.end(), std::inserter(join, join.begin()));
    if (join != zeros) throw Error("zero loci do not partition Null(sigma)");

    return CanonicalDecomposition{std::move(delta), std::move(lambda), s, std::move(wbar)};
}

} // namespace kpar
