#pragma once

#include <string>
#include <vector>

#include "kpar/errors.hpp"
#include "kpar/group.hpp"
#include "kpar/scalar.hpp"

namespace kpar {

/// Total table sigma : G x G -> field, stored densely. A zero entry means
/// the pair is a zero of sigma, i.e. the product is not composable.
class FactorSet {
public:
    FactorSet(const FiniteGroup& g, Field field)
        : group_(&g),
          field_(field),
          entries_(static_cast<std::size_t>(g.order()) * g.order(), FieldScalar::zero(field)) {}

    /// The all-ones factor set, the unit of the pointwise monoid.
    static FactorSet ones(const FiniteGroup& g, Field field) {
        FactorSet s(g, field);
        for (auto& e : s.entries_) e = FieldScalar::one(field);
        return s;
    }

    /// sigma_N: 1 on N x N for a subgroup N, 0 elsewhere.
    static FactorSet subgroup_indicator(const FiniteGroup& g, Field field, Mask n) {
        if (!g.is_subgroup(n)) throw InvalidGenerator("subset is not a subgroup");
        FactorSet s(g, field);
        for (int a : mask_elements(n))
            for (int b : mask_elements(n)) s.set(a, b, FieldScalar::one(field));
        return s;
    }

    const FiniteGroup& group() const { return *group_; }
    Field field() const { return field_; }
    int order() const { return group_->order(); }

    const FieldScalar& at(int g, int h) const {
        return entries_[static_cast<std::size_t>(g) * order() + h];
    }
    void set(int g, int h, FieldScalar v) {
        entries_[static_cast<std::size_t>(g) * order() + h] = std::move(v);
    }

    bool is_idempotent() const {
        for (const auto& e : entries_) {
            if (!e.is_zero() && !e.is_one()) return false;
        }
        return true;
    }

    friend bool operator==(const FactorSet& a, const FactorSet& b) {
        return a.group_ == b.group_ && a.field_ == b.field_ && a.entries_ == b.entries_;
    }

private:
    const FiniteGroup* group_;
    Field field_;
    std::vector<FieldScalar> entries_;
};

struct BasicViolation {
    int rule; // 1: sigma(1,1)=1; 2: sigma(g,1) pattern; 3: sigma(g,g^-1) symmetry; 4: zero involution
    int g, h;
    std::string what;
};

/// Scans the four necessary factor-set identities; an empty list is a
/// prerequisite for (not a proof of) membership in pm(G).
inline std::vector<BasicViolation> check_basic_axioms(const FactorSet& s) {
    std::vector<BasicViolation> out;
    const FiniteGroup& G = s.group();
    int n = G.order();
    if (!s.at(0, 0).is_one())
        out.push_back({1, 0, 0, "sigma(1,1) != 1"});
    for (int g = 0; g < n; ++g) {
        const FieldScalar& a = s.at(g, 0);
        if (!a.is_zero() && !a.is_one())
            out.push_back({2, g, 0, "sigma(g,1) outside {0,1}"});
        if (!(a == s.at(0, g)) || !(a == s.at(0, G.inv(g))) || !(a == s.at(G.inv(g), 0)))
            out.push_back({2, g, 0, "sigma(g,1)/sigma(1,g)/sigma(1,g^-1)/sigma(g^-1,1) differ"});
        if (!(s.at(g, G.inv(g)) == s.at(G.inv(g), g)))
            out.push_back({3, g, G.inv(g), "sigma(g,g^-1) != sigma(g^-1,g)"});
    }
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            if (s.at(g, h).is_zero() != s.at(G.inv(h), G.inv(g)).is_zero())
                out.push_back({4, g, h, "sigma(g,h)=0 not equivalent to sigma(h^-1,g^-1)=0"});
        }
    }
    return out;
}

/// Pointwise product; pm(G) is a commutative inverse monoid under it.
inline FactorSet pm_product(const FactorSet& a, const FactorSet& b) {
    if (&a.group() != &b.group()) throw GroupMismatch();
    if (a.field() != b.field()) throw FieldMismatch();
    FactorSet r(a.group(), a.field());
    int n = a.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) r.set(g, h, a.at(g, h) * b.at(g, h));
    return r;
}

/// Total global 2-cocycle: no zeros, and the cocycle identity
/// sigma(x,y) sigma(xy,z) = sigma(x,yz) sigma(y,z) holds on all triples.
inline bool is_total_cocycle(const FactorSet& s) {
    const FiniteGroup& G = s.group();
    int n = G.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (s.at(g, h).is_zero()) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (!(s.at(x, y) * s.at(G.mul(x, y), z) ==
                      s.at(x, G.mul(y, z)) * s.at(y, z)))
                    return false;
    return true;
}

/// sigma(g,g^-1) in {0,1} for all g.
inline bool is_normalized(const FactorSet& s) {
    const FiniteGroup& G = s.group();
    for (int g = 0; g < G.order(); ++g) {
        const FieldScalar& v = s.at(g, G.inv(g));
        if (!v.is_zero() && !v.is_one()) return false;
    }
    return true;
}

/// Restriction of sigma to a subgroup is a total global 2-cocycle there.
inline bool restriction_is_total_cocycle(const FactorSet& s, Mask subgroup) {
    const FiniteGroup& G = s.group();
    auto elems = mask_elements(subgroup);
    for (int x : elems)
        for (int y : elems)
            if (s.at(x, y).is_zero()) return false;
    for (int x : elems)
        for (int y : elems)
            for (int z : elems)
                if (!(s.at(x, y) * s.at(G.mul(x, y), z) ==
                      s.at(x, G.mul(y, z)) * s.at(y, z)))
                    return false;
    return true;
}

} // namespace kpar
