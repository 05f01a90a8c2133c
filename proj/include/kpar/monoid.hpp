#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kpar/parallel.hpp"
#include "kpar/spectrum.hpp"

namespace kpar {

/// Element of the scaled-pair inverse monoid: Zero, or k(U,g) with k != 0,
/// U a finite spectrum member and g in U. Zero is a distinguished variant,
/// never a triple with k = 0.
struct MonoidElement {
    bool zero = true;
    FieldScalar k;
    Mask u = 0;
    int g = 0;

    static MonoidElement make_zero() { return MonoidElement{}; }

    static MonoidElement make(FieldScalar k, Mask u, int g) {
        if (k.is_zero()) return make_zero();
        return MonoidElement{false, std::move(k), u, g};
    }

    friend bool operator==(const MonoidElement& a, const MonoidElement& b) {
        if (a.zero || b.zero) return a.zero == b.zero;
        return a.u == b.u && a.g == b.g && a.k == b.k;
    }
};

inline MonoidElement s_unit(const Spectrum& sp) {
    return MonoidElement::make(FieldScalar::one(sp.field()), Mask(1), 0);
}

/// k(U,g) * r(V,h) = sigma(g,h) chi(U + gV) kr (U + gV, gh).
inline MonoidElement s_mul(const Spectrum& sp, const MonoidElement& x, const MonoidElement& y) {
    if (x.zero || y.zero) return MonoidElement::make_zero();
    const FiniteGroup& G = sp.group();
    const FieldScalar& tw = sp.sigma().at(x.g, y.g);
    if (tw.is_zero()) return MonoidElement::make_zero();
    Mask joined = x.u | G.translate(y.u, x.g);
    if (!sp.chi(joined)) return MonoidElement::make_zero();
    return MonoidElement::make(tw * x.k * y.k, joined, G.mul(x.g, y.g));
}

/// Regular-semigroup inverse sigma(g,g^-1)^-1 k^-1 (g^-1 U, g^-1).
inline MonoidElement s_inverse(const Spectrum& sp, const MonoidElement& x) {
    if (x.zero) throw ZeroHasNoInverse();
    const FiniteGroup& G = sp.group();
    int gi = G.inv(x.g);
    FieldScalar tw = sp.sigma().at(x.g, gi);
    return MonoidElement::make(tw.inv() * x.k.inv(), G.translate(x.u, gi), gi);
}

struct MonoidReport {
    long long checks = 0;
    std::vector<std::string> failures;
    bool exhaustive = true;

    bool ok() const { return failures.empty(); }

    void fail(std::string what) {
        if (failures.size() < 32) failures.push_back(std::move(what));
        else if (failures.size() == 32) failures.push_back("...");
    }
};

struct MonoidCheckOptions {
    // Triples are scanned exhaustively while carrier^3 stays under this
    // budget; larger carriers fall back to seeded sampling.
    long long exhaustive_triple_budget = 8'000'000;
    long long sample_count = 100'000;
    std::uint64_t seed = 1;
    int workers = 1;
};

/// Carrier of basis elements (U, g), k = 1, in deterministic order.
inline std::vector<MonoidElement> monoid_carrier(const Spectrum& sp) {
    std::vector<MonoidElement> out;
    FieldScalar one = FieldScalar::one(sp.field());
    for (Mask u : sp.members()) {
        for (int g : mask_elements(u)) out.push_back(MonoidElement::make(one, u, g));
    }
    return out;
}

/// Checks the inverse-monoid axioms on the carrier: associativity, the
/// unit, inverse laws, idempotents being exactly the (U,1) and commuting,
/// scalar cancellativity, and the chi coherence identity used by the
/// associativity argument.
inline MonoidReport verify_monoid(const Spectrum& sp, MonoidCheckOptions opts = {}) {
    MonoidReport rep;
    auto carrier = monoid_carrier(sp);
    long long m = static_cast<long long>(carrier.size());
    const FiniteGroup& G = sp.group();

    auto el_str = [&](const MonoidElement& e) {
        if (e.zero) return std::string("0");
        return e.k.str() + "(" + SubsetMask{&G, e.u}.str() + "," + G.name(e.g) + ")";
    };

    // Unit.
    MonoidElement unit = s_unit(sp);
    for (const auto& x : carrier) {
        ++rep.checks;
        if (!(s_mul(sp, unit, x) == x) || !(s_mul(sp, x, unit) == x))
            rep.fail("unit fails at " + el_str(x));
    }

    // Associativity.
    auto assoc_at = [&](long long i, long long j, long long k, MonoidReport& r) {
        const auto& x = carrier[i];
        const auto& y = carrier[j];
        const auto& z = carrier[k];
        if (!(s_mul(sp, s_mul(sp, x, y), z) == s_mul(sp, x, s_mul(sp, y, z))))
            r.fail("associativity fails at (" + el_str(x) + "," + el_str(y) + "," + el_str(z) + ")");
    };
    long long triples = m * m * m;
    if (triples <= opts.exhaustive_triple_budget) {
        std::vector<MonoidReport> local(std::max(1, opts.workers));
        parallel_blocks(triples, opts.workers, [&](long long lo, long long hi, int w) {
            for (long long t = lo; t < hi; ++t) {
                ++local[w].checks;
                assoc_at(t / (m * m), (t / m) % m, t % m, local[w]);
            }
        });
        for (auto& l : local) {
            rep.checks += l.checks;
            for (auto& f : l.failures) rep.fail(std::move(f));
        }
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<long long> pick(0, m - 1);
        for (long long t = 0; t < opts.sample_count; ++t, ++rep.checks)
            assoc_at(pick(rng), pick(rng), pick(rng), rep);
    }

    // Inverse laws.
    for (const auto& x : carrier) {
        ++rep.checks;
        MonoidElement xi = s_inverse(sp, x);
        if (!(s_mul(sp, s_mul(sp, x, xi), x) == x))
            rep.fail("x x^-1 x != x at " + el_str(x));
        if (!(s_mul(sp, s_mul(sp, xi, x), xi) == xi))
            rep.fail("x^-1 x x^-1 != x^-1 at " + el_str(x));
    }

    // Idempotents: exactly the (1, U, 1), and they commute.
    std::vector<MonoidElement> idems;
    for (const auto& x : carrier) {
        ++rep.checks;
        bool idem = s_mul(sp, x, x) == x;
        bool expected = x.g == 0 && x.k.is_one();
        if (idem != expected)
            rep.fail("idempotent classification fails at " + el_str(x));
        if (idem) idems.push_back(x);
    }
    for (const auto& e : idems) {
        for (const auto& f : idems) {
            ++rep.checks;
            if (!(s_mul(sp, e, f) == s_mul(sp, f, e)))
                rep.fail("idempotents do not commute: " + el_str(e) + ", " + el_str(f));
        }
    }

    // kappa-cancellativity: r x = t x => r = t for x != 0. Scalars are
    // sampled from a small pool of the field.
    std::vector<FieldScalar> pool;
    for (int v = 1; v <= 4; ++v) {
        FieldScalar c = FieldScalar::from_int(sp.field(), v);
        if (!c.is_zero()) pool.push_back(c);
    }
    for (const auto& x : carrier) {
        for (const auto& r : pool) {
            for (const auto& t : pool) {
                if (r == t) continue;
                ++rep.checks;
                MonoidElement rx = MonoidElement::make(r * x.k, x.u, x.g);
                MonoidElement tx = MonoidElement::make(t * x.k, x.u, x.g);
                if (rx == tx) rep.fail("cancellativity fails at " + el_str(x));
            }
        }
    }

    // chi coherence: chi(U+gV) chi(U+gV+ghS) = chi(V+hS) chi(U+gV+ghS).
    auto coherence_at = [&](const MonoidElement& x, const MonoidElement& y, Mask s) {
        Mask ugv = x.u | G.translate(y.u, x.g);
        Mask whole = ugv | G.translate(s, G.mul(x.g, y.g));
        Mask vhs = y.u | G.translate(s, y.g);
        if ((sp.chi(ugv) && sp.chi(whole)) != (sp.chi(vhs) && sp.chi(whole)))
            rep.fail("chi coherence fails at " + el_str(x) + "," + el_str(y));
    };
    long long omega_count = static_cast<long long>(sp.members().size());
    if (m * m * omega_count <= opts.exhaustive_triple_budget) {
        for (const auto& x : carrier) {
            for (const auto& y : carrier) {
                for (Mask s : sp.members()) {
                    ++rep.checks;
                    coherence_at(x, y, s);
                }
            }
        }
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(opts.seed + 1);
        for (long long t = 0; t < opts.sample_count; ++t) {
            ++rep.checks;
            coherence_at(carrier[rng() % m], carrier[rng() % m],
                         sp.members()[rng() % omega_count]);
        }
    }

    return rep;
}

} // namespace kpar
