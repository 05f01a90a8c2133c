#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kpar/algebra.hpp"
#include "kpar/parallel.hpp"
#include "kpar/spectrum.hpp"

namespace kpar {

/// Basis arrow (g, A): A a spectrum member with g^-1 in A. Source object A,
/// target gA.
struct Arrow {
    int g = 0;
    Mask a = 0;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

inline bool arrow_valid(const Spectrum& sp, const Arrow& x) {
    return sp.contains(x.a) && mask_contains(x.a, sp.group().inv(x.g));
}

inline Mask arrow_target(const Spectrum& sp, const Arrow& x) {
    return sp.group().translate(x.a, x.g);
}

struct WeightedArrow {
    FieldScalar w;
    Arrow arrow;
    bool zero = true;
};

/// (g,B) * (h,A) = sigma(g,h) (gh, A) when B = hA, else 0.
inline WeightedArrow r_mul(const Spectrum& sp, const Arrow& x, const Arrow& y) {
    const FiniteGroup& G = sp.group();
    if (x.a != G.translate(y.a, y.g)) return WeightedArrow{};
    return WeightedArrow{sp.sigma().at(x.g, y.g), Arrow{G.mul(x.g, y.g), y.a}, false};
}

/// Sparse element of the groupoid algebra.
class RElement {
public:
    RElement() = default;

    static RElement term(FieldScalar c, Arrow a) {
        RElement e;
        e.add_term(a, std::move(c));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Arrow, FieldScalar>& terms() const { return terms_; }

    void add_term(Arrow a, FieldScalar c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(a, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend RElement operator+(const RElement& a, const RElement& b) {
        RElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }

    friend bool operator==(const RElement& a, const RElement& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Arrow, FieldScalar> terms_;
};

inline RElement r_unit(const Spectrum& sp) {
    RElement u;
    for (Mask a : sp.members()) u.add_term(Arrow{0, a}, FieldScalar::one(sp.field()));
    return u;
}

/// Composability keys on the source object, so the product costs
/// O(|x| * distinct h in y) lookups instead of |x| * |y|.
inline RElement r_elem_mul(const Spectrum& sp, const RElement& x, const RElement& y) {
    const FiniteGroup& G = sp.group();
    std::map<int, std::map<Mask, FieldScalar>> y_by_g;
    for (const auto& [ka, c] : y.terms()) y_by_g[ka.g][G.translate(ka.a, ka.g)] = c;
    RElement r;
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [h, targets] : y_by_g) {
            auto it = targets.find(kx.a);
            if (it == targets.end()) continue;
            const FieldScalar& tw = sp.sigma().at(kx.g, h);
            if (tw.is_zero()) continue;
            Mask src = G.translate(kx.a, G.inv(h));
            r.add_term(Arrow{G.mul(kx.g, h), src}, tw * cx * it->second);
        }
    }
    return r;
}

/// Psi on the (U, g) basis: the sum of (g, A) over members A containing
/// g^-1 U.
inline RElement psi_basis(const Spectrum& sp, const BasisKey& key) {
    const FiniteGroup& G = sp.group();
    Mask need = G.translate(key.u, G.inv(key.g));
    RElement out;
    FieldScalar one = FieldScalar::one(sp.field());
    for (Mask a : sp.members()) {
        if (mask_subset(need, a)) out.add_term(Arrow{key.g, a}, one);
    }
    return out;
}

inline RElement psi_map(const Spectrum& sp, const AlgebraElement& x) {
    RElement out;
    for (const auto& [k, c] : x.terms()) {
        RElement img = psi_basis(sp, k);
        for (const auto& [a, w] : img.terms()) out.add_term(a, c * w);
    }
    return out;
}

struct PsiReport {
    bool bijective = false;
    bool multiplicative = true;
    bool exhaustive = true;
    long long pairs_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return bijective && multiplicative; }
    void fail(std::string w) {
        if (failures.size() < 32) failures.push_back(std::move(w));
    }
};

struct PsiCheckOptions {
    long long exhaustive_pair_budget = 400'000;
    long long sample_count = 20'000;
    std::uint64_t seed = 1;
    int workers = 1;
};

/// Bijectivity comes from unitriangularity: Psi(U, g) hits (g, g^-1 U)
/// with coefficient one plus terms on strictly larger objects, and
/// (U, g) <-> (g, g^-1 U) is a bijection of the two bases. Both facts are
/// checked directly; multiplicativity is scanned over basis pairs.
inline PsiReport verify_psi_isomorphism(const Spectrum& sp, PsiCheckOptions opts = {}) {
    PsiReport rep;
    const FiniteGroup& G = sp.group();
    auto keys = detail::basis_keys(sp);

    std::vector<Arrow> hit;
    rep.bijective = true;
    for (const auto& key : keys) {
        Mask lead = G.translate(key.u, G.inv(key.g));
        RElement img = psi_basis(sp, key);
        auto it = img.terms().find(Arrow{key.g, lead});
        if (it == img.terms().end() || !it->second.is_one()) {
            rep.bijective = false;
            rep.fail("leading arrow missing for a basis pair");
            continue;
        }
        for (const auto& [a, c] : img.terms()) {
            if (a.a != lead && !mask_subset(lead, a.a)) {
                rep.bijective = false;
                rep.fail("non-superset arrow in a Psi image");
            }
        }
        hit.push_back(Arrow{key.g, lead});
    }
    std::sort(hit.begin(), hit.end());
    hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
    long long arrow_count = 0;
    for (Mask a : sp.members()) arrow_count += mask_size(a);
    if (static_cast<long long>(hit.size()) != arrow_count) {
        rep.bijective = false;
        rep.fail("leading arrows do not exhaust the arrow basis");
    }

    long long m = static_cast<long long>(keys.size());
    std::vector<RElement> images(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) images[i] = psi_basis(sp, keys[i]);
    FieldScalar one = FieldScalar::one(sp.field());

    auto check_pair = [&](long long i, long long j, PsiReport& r) {
        AlgebraElement x = AlgebraElement::term(one, keys[i].u, keys[i].g);
        AlgebraElement y = AlgebraElement::term(one, keys[j].u, keys[j].g);
        RElement lhs = psi_map(sp, a_mul(sp, x, y));
        RElement rhs = r_elem_mul(sp, images[i], images[j]);
        if (!(lhs == rhs)) {
            r.multiplicative = false;
            r.fail("Psi(xy) != Psi(x)Psi(y) at pair (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
        }
    };

    if (m * m <= opts.exhaustive_pair_budget) {
        std::vector<PsiReport> local(std::max(1, opts.workers));
        parallel_blocks(m * m, opts.workers, [&](long long lo, long long hi, int w) {
            for (long long t = lo; t < hi; ++t) {
                ++local[w].pairs_checked;
                check_pair(t / m, t % m, local[w]);
            }
        });
        for (auto& l : local) {
            rep.pairs_checked += l.pairs_checked;
            if (!l.multiplicative) rep.multiplicative = false;
            for (auto& f : l.failures) rep.fail(std::move(f));
        }
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<long long> pick(0, m - 1);
        for (long long t = 0; t < opts.sample_count; ++t) {
            ++rep.pairs_checked;
            check_pair(pick(rng), pick(rng), rep);
        }
    }
    return rep;
}

/// Objects are spectrum members; A ~ gA for every arrow (g, A).
/// Reachability is a single arrow, so a union-find over direct translates
/// finds the components.
inline std::vector<std::vector<int>> connected_components(const Spectrum& sp) {
    const FiniteGroup& G = sp.group();
    const auto& members = sp.members();
    int m = static_cast<int>(members.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < m; ++i) {
        for (int gi : mask_elements(members[i])) {
            int g = G.inv(gi);
            int j = sp.index_of(G.translate(members[i], g));
            int a = find(i), b = find(j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<int, std::vector<int>> buckets;
    for (int i = 0; i < m; ++i) buckets[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, objs] : buckets) out.push_back(std::move(objs));
    return out;
}

struct Isotropy {
    Mask subgroup = 0;
    std::vector<std::vector<FieldScalar>> cocycle; // indexed by sorted subgroup elements
    bool total_cocycle = false;
};

/// Stabilizer H_A = {g : gA = A} and the restriction of sigma to it, which
/// is a total global 2-cocycle whenever A is a member.
inline Isotropy isotropy(const Spectrum& sp, Mask a) {
    if (!sp.contains(a)) throw NotInOmega();
    const FiniteGroup& G = sp.group();
    Isotropy iso;
    for (int g = 0; g < G.order(); ++g) {
        if (G.translate(a, g) == a) iso.subgroup |= Mask(1) << g;
    }
    auto elems = mask_elements(iso.subgroup);
    iso.cocycle.assign(elems.size(), std::vector<FieldScalar>(elems.size(),
                                                             FieldScalar::zero(sp.field())));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            iso.cocycle[i][j] = sp.sigma().at(elems[i], elems[j]);
    iso.total_cocycle = restriction_is_total_cocycle(sp.sigma(), iso.subgroup);
    return iso;
}

struct Summand {
    std::vector<Mask> objects;    // sorted by (size, mask)
    Mask base = 0;                // smallest object
    std::vector<int> connectors;  // gamma_i: smallest g with g*base = objects[i]
    int n = 0;                    // matrix size
    Isotropy iso;
};

struct DecompositionReport {
    std::vector<Summand> summands;
    long long dim_algebra = 0;  // sum |U| over members
    long long dim_summands = 0; // sum n_i^2 |H_i|
    bool dims_match() const { return dim_algebra == dim_summands; }
};

inline DecompositionReport decompose(const Spectrum& sp) {
    const FiniteGroup& G = sp.group();
    DecompositionReport rep;
    rep.dim_algebra = dimension(sp);
    for (const auto& comp : connected_components(sp)) {
        Summand s;
        for (int idx : comp) s.objects.push_back(sp.members()[idx]);
        std::sort(s.objects.begin(), s.objects.end(), mask_less);
        s.base = s.objects.front();
        s.n = static_cast<int>(s.objects.size());
        for (Mask obj : s.objects) {
            int connector = -1;
            for (int g = 0; g < G.order() && connector < 0; ++g) {
                if (mask_contains(s.base, G.inv(g)) && G.translate(s.base, g) == obj)
                    connector = g;
            }
            // Reachability within a component is always a single arrow.
            if (connector < 0) throw Error("component object unreachable from its base");
            s.connectors.push_back(connector);
        }
        s.iso = isotropy(sp, s.base);
        rep.dim_summands +=
            static_cast<long long>(s.n) * s.n * mask_size(s.iso.subgroup);
        rep.summands.push_back(std::move(s));
    }
    std::sort(rep.summands.begin(), rep.summands.end(),
              [](const Summand& a, const Summand& b) { return mask_less(a.base, b.base); });
    return rep;
}

namespace detail {

// Weighted isotropy element (r, h) of the twisted group algebra at `base`.
struct TwistedTerm {
    FieldScalar r;
    int h;
};

inline TwistedTerm conjugate_to_base(const Spectrum& sp, const Summand& s, const Arrow& arr) {
    const FiniteGroup& G = sp.group();
    auto obj_index = [&](Mask m) {
        return static_cast<int>(std::lower_bound(s.objects.begin(), s.objects.end(), m,
                                                 mask_less) -
                                s.objects.begin());
    };
    int i = obj_index(arr.a);
    int j = obj_index(arrow_target(sp, arr));
    int gi = s.connectors[i], gj = s.connectors[j];
    // z = gamma_j^-1 * arr * gamma_i, evaluated with the groupoid twist.
    WeightedArrow right = r_mul(sp, arr, Arrow{gi, s.base});
    Arrow gj_inv{G.inv(gj), G.translate(s.base, gj)};
    WeightedArrow whole = r_mul(sp, gj_inv, right.arrow);
    FieldScalar inv_weight = sp.sigma().at(G.inv(gj), gj).inv();
    return TwistedTerm{inv_weight * right.w * whole.w, whole.arrow.g};
}

} // namespace detail

/// Verifies the matrix-unit picture of one summand: arrows biject with
/// triples (j, i, h), and tau(arrow) = z E_{j,i} is multiplicative against
/// the twisted group algebra product on composable pairs.
inline bool matrix_units_check(const Spectrum& sp, const Summand& s,
                               std::vector<std::string>* failures = nullptr) {
    const FiniteGroup& G = sp.group();
    auto say = [&](std::string w) {
        if (failures && failures->size() < 16) failures->push_back(std::move(w));
    };
    auto obj_index = [&](Mask m) {
        return static_cast<int>(std::lower_bound(s.objects.begin(), s.objects.end(), m,
                                                 mask_less) -
                                s.objects.begin());
    };

    std::vector<Arrow> arrows;
    for (Mask a : s.objects) {
        for (int gi : mask_elements(a)) arrows.push_back(Arrow{G.inv(gi), a});
    }
    long long expected = static_cast<long long>(s.n) * s.n * mask_size(s.iso.subgroup);
    if (static_cast<long long>(arrows.size()) != expected) {
        say("arrow count != n^2 |H|");
        return false;
    }

    auto h_elems = mask_elements(s.iso.subgroup);
    auto h_index = [&](int h) {
        return static_cast<int>(std::lower_bound(h_elems.begin(), h_elems.end(), h) -
                                h_elems.begin());
    };
    auto tw_mul = [&](const detail::TwistedTerm& a, const detail::TwistedTerm& b) {
        return detail::TwistedTerm{a.r * b.r * sp.sigma().at(a.h, b.h), G.mul(a.h, b.h)};
    };

    bool ok = true;
    std::vector<std::vector<bool>> seen(
        s.n, std::vector<bool>(static_cast<std::size_t>(s.n) * h_elems.size(), false));
    std::vector<detail::TwistedTerm> zs;
    std::vector<int> src_of, tgt_of;
    for (const auto& arr : arrows) {
        auto z = detail::conjugate_to_base(sp, s, arr);
        if (z.r.is_zero() || !mask_contains(s.iso.subgroup, z.h)) {
            say("conjugation left the isotropy algebra");
            ok = false;
        }
        int i = obj_index(arr.a), j = obj_index(arrow_target(sp, arr));
        std::size_t slot = static_cast<std::size_t>(i) * h_elems.size() + h_index(z.h);
        if (seen[j][slot]) {
            say("duplicate (j,i,h) triple: tau is not injective on arrows");
            ok = false;
        }
        seen[j][slot] = true;
        zs.push_back(z);
        src_of.push_back(i);
        tgt_of.push_back(j);
    }

    for (std::size_t p = 0; p < arrows.size(); ++p) {
        for (std::size_t q = 0; q < arrows.size(); ++q) {
            WeightedArrow prod = r_mul(sp, arrows[p], arrows[q]);
            bool composable = src_of[p] == tgt_of[q];
            if (composable != !prod.zero) {
                say("composability disagrees with the product");
                ok = false;
                continue;
            }
            if (!composable) continue;
            auto lhs = tw_mul(zs[p], zs[q]);
            auto z_prod = detail::conjugate_to_base(sp, s, prod.arrow);
            detail::TwistedTerm rhs{prod.w * z_prod.r, z_prod.h};
            if (!(lhs.h == rhs.h) || !(lhs.r == rhs.r)) {
                say("tau(gamma) tau(gamma') != tau(gamma gamma')");
                ok = false;
            }
        }
    }
    return ok;
}

/// sigma(g,1) = 0 for all g != 1; equivalently the decomposition is the
/// single summand kappa.
inline bool is_simple(const FactorSet& sigma) {
    for (int g = 1; g < sigma.order(); ++g) {
        if (!sigma.at(g, 0).is_zero()) return false;
    }
    return true;
}

} // namespace kpar
