#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "kpar/errors.hpp"
#include "kpar/factor_set.hpp"
#include "kpar/group.hpp"

namespace kpar {

inline constexpr int kDefaultOrderCap = 12;

/// The four-factor coboundary value
///   sigma(x,y) sigma(xy,z) sigma(z^-1 y^-1, x^-1) sigma(z^-1, y^-1).
/// For normalized sigma this equals the classical cocycle defect.
inline FieldScalar coboundary_defect(const FactorSet& s, int x, int y, int z) {
    const FiniteGroup& G = s.group();
    int xy = G.mul(x, y);
    int zi = G.inv(z), yi = G.inv(y), xi = G.inv(x);
    return s.at(x, y) * s.at(xy, z) * s.at(G.mul(zi, yi), xi) * s.at(zi, yi);
}

/// Prohibition masks of a factor set. Type I masks {h, hg, hgs} come from
/// zeros sigma(g,s) = 0; type II masks {h, hg, hgs, hgst} from failures of
/// the cocycle identity sigma(g,s) sigma(gs,t) != sigma(g,st) sigma(s,t).
/// Each family keeps its inclusion-minimal members; `minimal` is the
/// inclusion-minimal union, which is what subset tests quantify over.
struct ProhibitionSet {
    std::vector<Mask> type1;
    std::vector<Mask> type2;
    std::vector<Mask> minimal;

    bool excludes(Mask xi) const {
        for (Mask v : minimal) {
            if (mask_subset(v, xi)) return true;
        }
        return false;
    }
};

struct ScanOptions {
    enum class Type2 { automatic, on, off };
    // `automatic` skips the O(n^4) type-II scan for idempotent sigma, where
    // type-I prohibitions already decide exclusion.
    Type2 type2 = Type2::automatic;
};

namespace detail {

inline std::vector<Mask> minimal_masks(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end(), mask_less);
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> out;
    for (Mask m : masks) {
        bool dominated = false;
        for (Mask kept : out) {
            if (mask_subset(kept, m)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(m);
    }
    return out;
}

} // namespace detail

inline ProhibitionSet compute_prohibitions(const FactorSet& sigma, ScanOptions opts = {}) {
    const FiniteGroup& G = sigma.group();
    int n = G.order();
    ProhibitionSet out;

    std::vector<Mask> t1;
    for (int g = 0; g < n; ++g) {
        for (int s = 0; s < n; ++s) {
            if (!sigma.at(g, s).is_zero()) continue;
            int gs = G.mul(g, s);
            for (int h = 0; h < n; ++h) {
                Mask m = (Mask(1) << h) | (Mask(1) << G.mul(h, g)) | (Mask(1) << G.mul(h, gs));
                t1.push_back(m);
            }
        }
    }
    out.type1 = detail::minimal_masks(std::move(t1));

    bool scan_type2 = opts.type2 == ScanOptions::Type2::on ||
                      (opts.type2 == ScanOptions::Type2::automatic && !sigma.is_idempotent());
    if (scan_type2) {
        std::vector<Mask> t2;
        for (int g = 0; g < n; ++g) {
            for (int s = 0; s < n; ++s) {
                int gs = G.mul(g, s);
                for (int t = 0; t < n; ++t) {
                    if (sigma.at(g, s) * sigma.at(gs, t) ==
                        sigma.at(g, G.mul(s, t)) * sigma.at(s, t))
                        continue;
                    int gst = G.mul(gs, t);
                    for (int h = 0; h < n; ++h) {
                        Mask m = (Mask(1) << h) | (Mask(1) << G.mul(h, g)) |
                                 (Mask(1) << G.mul(h, gs)) | (Mask(1) << G.mul(h, gst));
                        t2.push_back(m);
                    }
                }
            }
        }
        out.type2 = detail::minimal_masks(std::move(t2));
    }

    std::vector<Mask> all = out.type1;
    all.insert(all.end(), out.type2.begin(), out.type2.end());
    out.minimal = detail::minimal_masks(std::move(all));
    return out;
}

/// Membership test against an explicit prohibition set: xi contains the
/// identity and no prohibition embeds in it.
inline bool in_omega(const ProhibitionSet& p, Mask xi) {
    if (!mask_contains(xi, 0)) throw IdentityMissing();
    return !p.excludes(xi);
}

/// The spectrum Omega_sigma of a factor set on a finite group, together
/// with the data every other structure is built from: the prohibition
/// masks, the full member list, and constant-time membership queries.
///
/// Enumeration grows subsets one element at a time in increasing index
/// order; downward closure of Omega_sigma makes the pruned search exact.
class Spectrum {
public:
    explicit Spectrum(FactorSet sigma, int order_cap = kDefaultOrderCap, ScanOptions opts = {})
        : sigma_(std::move(sigma)) {
        const FiniteGroup& G = sigma_.group();
        if (G.order() > order_cap)
            throw CapExceeded("group order " + std::to_string(G.order()) + " over cap " +
                              std::to_string(order_cap));
        prohibitions_ = compute_prohibitions(sigma_, opts);
        enumerate();
    }

    const FiniteGroup& group() const { return sigma_.group(); }
    const FactorSet& sigma() const { return sigma_; }
    Field field() const { return sigma_.field(); }
    const ProhibitionSet& prohibitions() const { return prohibitions_; }

    /// Members sorted by (size, mask value).
    const std::vector<Mask>& members() const { return members_; }

    bool contains(Mask xi) const { return member_set_.count(xi) != 0; }

    /// chi(U): 1 if U is a member, else 0. U is assumed to contain 1.
    bool chi(Mask u) const { return contains(u); }

    bool in_omega(Mask xi) const {
        if (!mask_contains(xi, 0)) throw IdentityMissing();
        return contains(xi);
    }

    int index_of(Mask xi) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), xi, mask_less);
        if (it == members_.end() || *it != xi) return -1;
        return static_cast<int>(it - members_.begin());
    }

    /// A_sigma(xi) = {g not in xi : xi + {g} still a member}.
    Mask admissibles(Mask xi) const {
        if (!contains(xi)) throw NotInOmega();
        Mask out = 0;
        for (int g = 1; g < group().order(); ++g) {
            if (mask_contains(xi, g)) continue;
            if (contains(xi | (Mask(1) << g))) out |= Mask(1) << g;
        }
        return out;
    }

    /// Fixed points of the spectral translation by g: members with g in xi
    /// and g.xi = xi.
    std::vector<Mask> fixed_points(int g) const {
        if (g == 0) throw PreconditionFailed("fixed points are defined for g != 1");
        std::vector<Mask> out;
        for (Mask xi : members_) {
            if (mask_contains(xi, g) && group().translate(xi, g) == xi) out.push_back(xi);
        }
        return out;
    }

private:
    FactorSet sigma_;
    ProhibitionSet prohibitions_;
    std::vector<Mask> members_;
    std::unordered_set<Mask> member_set_;

    void enumerate() {
        int n = group().order();
        // Bucket prohibitions by their largest element: when the set grows
        // in increasing index order, only those can newly embed.
        std::vector<std::vector<Mask>> by_top(n);
        for (Mask v : prohibitions_.minimal) {
            int top = 63 - std::countl_zero(v);
            by_top[top].push_back(v);
        }
        struct Node {
            Mask set;
            int last;
        };
        std::vector<Node> stack;
        // {1} is a member whenever sigma(1,1) = 1: effective prohibitions
        // then have at least two elements. Checked, not assumed.
        if (!prohibitions_.excludes(Mask(1))) stack.push_back({Mask(1), 0});
        while (!stack.empty()) {
            Node cur = stack.back();
            stack.pop_back();
            members_.push_back(cur.set);
            for (int g = n - 1; g > cur.last; --g) {
                Mask grown = cur.set | (Mask(1) << g);
                bool blocked = false;
                for (Mask v : by_top[g]) {
                    if (mask_subset(v, grown)) {
                        blocked = true;
                        break;
                    }
                }
                if (!blocked) stack.push_back({grown, g});
            }
        }
        std::sort(members_.begin(), members_.end(), mask_less);
        member_set_.insert(members_.begin(), members_.end());
    }
};

struct FixedPointEntry {
    int g;
    std::vector<Mask> fixed;
};

struct SpectrumPointEntry {
    Mask xi;
    int size;
    int admissible_count;
    bool isolated; // finite G: xi and A(xi) are always finite, so always true
};

/// Topological-freeness data of the spectral action. For finite G the
/// spectrum is discrete, so the action is topologically free exactly when
/// every non-identity element has no fixed point.
struct FreenessReport {
    std::vector<FixedPointEntry> fixed_points;
    std::vector<SpectrumPointEntry> points;
    bool topologically_free = true;
};

inline FreenessReport freeness_report(const Spectrum& sp) {
    FreenessReport r;
    const FiniteGroup& G = sp.group();
    for (int g = 1; g < G.order(); ++g) {
        FixedPointEntry e{g, sp.fixed_points(g)};
        if (!e.fixed.empty()) r.topologically_free = false;
        r.fixed_points.push_back(std::move(e));
    }
    for (Mask xi : sp.members()) {
        int adm = mask_size(sp.admissibles(xi));
        r.points.push_back({xi, mask_size(xi), adm, true});
    }
    return r;
}

} // namespace kpar
