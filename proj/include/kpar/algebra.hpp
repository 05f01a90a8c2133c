#pragma once

#include <map>
#include <string>
#include <vector>

#include "kpar/linalg.hpp"
#include "kpar/monoid.hpp"
#include "kpar/spectrum.hpp"

namespace kpar {

/// Basis pair (U, g): U a finite spectrum member, g in U.
struct BasisKey {
    Mask u = 0;
    int g = 0;
    friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// Sparse vector over the (U, g) basis; the concrete realization of the
/// twisted partial group algebra. The empty mapping is zero.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement term(FieldScalar c, Mask u, int g) {
        AlgebraElement e;
        e.add_term(BasisKey{u, g}, std::move(c));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisKey, FieldScalar>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(BasisKey key, FieldScalar c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(key, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }

    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        return r;
    }

    AlgebraElement scaled(const FieldScalar& c) const {
        AlgebraElement r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.add_term(k, c * v);
        return r;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms_ == b.terms_;
    }

    std::string str(const FiniteGroup& G) const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.str() + "*(" + SubsetMask{&G, k.u}.str() + "," + G.name(k.g) + ")";
        }
        return out;
    }

private:
    std::map<BasisKey, FieldScalar> terms_;
};

inline AlgebraElement a_unit(const Spectrum& sp) {
    return AlgebraElement::term(FieldScalar::one(sp.field()), Mask(1), 0);
}

/// Bilinear extension of the monoid product to sparse elements.
inline AlgebraElement a_mul(const Spectrum& sp, const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r;
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            MonoidElement p = s_mul(sp, MonoidElement::make(cx * cy, kx.u, kx.g),
                                    MonoidElement::make(FieldScalar::one(sp.field()), ky.u, ky.g));
            if (!p.zero) r.add_term(BasisKey{p.u, p.g}, p.k);
        }
    }
    return r;
}

/// Image of the generator symbol of g: chi({1,g}) ({1,g}, g).
inline AlgebraElement gen(const Spectrum& sp, int g) {
    Mask m = Mask(1) | (Mask(1) << g);
    if (!sp.chi(m)) return AlgebraElement();
    return AlgebraElement::term(FieldScalar::one(sp.field()), m, g);
}

/// e_g = sigma(g,g^-1)^-1 gen(g) gen(g^-1) when sigma(g,g^-1) != 0, else 0.
inline AlgebraElement e_idempotent(const Spectrum& sp, int g) {
    const FieldScalar& tw = sp.sigma().at(g, sp.group().inv(g));
    if (tw.is_zero()) return AlgebraElement();
    return a_mul(sp, gen(sp, g), gen(sp, sp.group().inv(g))).scaled(tw.inv());
}

/// Upsilon_xi = prod_{s in xi} e_s * prod_{t not in xi} (1 - e_t).
inline AlgebraElement upsilon(const Spectrum& sp, Mask xi) {
    if (!sp.contains(xi)) throw NotInOmega();
    AlgebraElement acc = a_unit(sp);
    int n = sp.group().order();
    for (int s = 0; s < n; ++s) {
        if (mask_contains(xi, s)) acc = a_mul(sp, acc, e_idempotent(sp, s));
    }
    for (int t = 0; t < n; ++t) {
        if (!mask_contains(xi, t)) acc = a_mul(sp, acc, a_unit(sp) - e_idempotent(sp, t));
    }
    return acc;
}

/// Sum of all Upsilon_A is the unit; distinct Upsilons are orthogonal
/// idempotents.
inline bool verify_partition_of_unity(const Spectrum& sp) {
    std::vector<AlgebraElement> ups;
    AlgebraElement sum;
    for (Mask a : sp.members()) {
        ups.push_back(upsilon(sp, a));
        sum = sum + ups.back();
    }
    if (!(sum == a_unit(sp))) return false;
    for (std::size_t i = 0; i < ups.size(); ++i) {
        if (!(a_mul(sp, ups[i], ups[i]) == ups[i])) return false;
        for (std::size_t j = i + 1; j < ups.size(); ++j) {
            if (!a_mul(sp, ups[i], ups[j]).is_zero()) return false;
        }
    }
    return true;
}

/// dim = sum over members U of |U|.
inline long long dimension(const Spectrum& sp) {
    long long d = 0;
    for (Mask u : sp.members()) d += mask_size(u);
    return d;
}

struct RelationReport {
    long long checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void fail(std::string w) {
        if (failures.size() < 32) failures.push_back(std::move(w));
    }
};

/// The four defining relations of the twisted partial group algebra, for
/// the generator images over all pairs (g, h).
inline RelationReport check_defining_relations(const Spectrum& sp) {
    RelationReport rep;
    const FiniteGroup& G = sp.group();
    const FactorSet& s = sp.sigma();
    int n = G.order();
    std::vector<AlgebraElement> gens(n);
    for (int g = 0; g < n; ++g) gens[g] = gen(sp, g);
    AlgebraElement unit = a_unit(sp);

    for (int g = 0; g < n; ++g) {
        ++rep.checks;
        if (!(a_mul(sp, gens[g], gens[0]) == gens[g]) ||
            !(a_mul(sp, gens[0], gens[g]) == gens[g]))
            rep.fail("unit relation fails at g=" + G.name(g));
    }
    for (int g = 0; g < n; ++g) {
        int gi = G.inv(g);
        for (int h = 0; h < n; ++h) {
            int hi = G.inv(h), gh = G.mul(g, h);
            ++rep.checks;
            if (s.at(g, h).is_zero()) {
                if (!a_mul(sp, gens[gi], gens[gh]).is_zero() ||
                    !a_mul(sp, gens[gh], gens[hi]).is_zero())
                    rep.fail("zero relation fails at (" + G.name(g) + "," + G.name(h) + ")");
            }
            AlgebraElement lhs = a_mul(sp, a_mul(sp, gens[gi], gens[g]), gens[h]);
            AlgebraElement rhs = a_mul(sp, gens[gi], gens[gh]).scaled(s.at(g, h));
            if (!(lhs == rhs))
                rep.fail("left relation fails at (" + G.name(g) + "," + G.name(h) + ")");
            lhs = a_mul(sp, a_mul(sp, gens[g], gens[h]), gens[hi]);
            rhs = a_mul(sp, gens[gh], gens[hi]).scaled(s.at(g, h));
            if (!(lhs == rhs))
                rep.fail("right relation fails at (" + G.name(g) + "," + G.name(h) + ")");
        }
    }
    return rep;
}

namespace detail {

inline std::vector<BasisKey> basis_keys(const Spectrum& sp) {
    std::vector<BasisKey> keys;
    for (Mask u : sp.members()) {
        for (int g : mask_elements(u)) keys.push_back(BasisKey{u, g});
    }
    return keys;
}

inline Vec coords(const Spectrum& sp, const std::vector<BasisKey>& keys,
                  const AlgebraElement& x) {
    Vec v(keys.size(), FieldScalar::zero(sp.field()));
    for (const auto& [k, c] : x.terms()) {
        auto it = std::lower_bound(keys.begin(), keys.end(), k);
        v[static_cast<std::size_t>(it - keys.begin())] = c;
    }
    return v;
}

} // namespace detail

/// Whether the two-sided ideal generated by x meets the span of the pairs
/// (U, 1), i.e. the image of the idempotent-generated subalgebra. Closure
/// iterates products with basis elements until the rank stabilizes.
inline bool ideal_meets_B(const Spectrum& sp, const AlgebraElement& x) {
    if (x.is_zero()) throw ZeroElement();
    auto keys = detail::basis_keys(sp);
    int dim = static_cast<int>(keys.size());
    FieldScalar one = FieldScalar::one(sp.field());

    Subspace ideal(dim, sp.field());
    std::vector<AlgebraElement> pending{x};
    ideal.insert(detail::coords(sp, keys, x));
    while (!pending.empty()) {
        AlgebraElement v = std::move(pending.back());
        pending.pop_back();
        for (const auto& key : keys) {
            AlgebraElement b = AlgebraElement::term(one, key.u, key.g);
            for (AlgebraElement prod : {a_mul(sp, b, v), a_mul(sp, v, b)}) {
                if (prod.is_zero()) continue;
                if (ideal.insert(detail::coords(sp, keys, prod))) pending.push_back(std::move(prod));
            }
        }
    }

    Subspace bspan(dim, sp.field());
    for (int i = 0; i < dim; ++i) {
        if (keys[i].g != 0) continue;
        Vec v(dim, FieldScalar::zero(sp.field()));
        v[i] = one;
        bspan.insert(std::move(v));
    }
    return Subspace::intersect(ideal, bspan).rank() > 0;
}

} // namespace kpar
