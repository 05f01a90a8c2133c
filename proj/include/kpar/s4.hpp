#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "kpar/factor_set.hpp"
#include "kpar/parallel.hpp"
#include "kpar/spectrum.hpp"

namespace kpar {

using Perm4 = std::array<int, 4>;
using Triple = std::array<int, 3>;

inline Perm4 perm4_identity() { return {0, 1, 2, 3}; }

inline std::vector<Perm4> all_perm4() {
    std::vector<Perm4> out;
    Perm4 p = perm4_identity();
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline Perm4 perm4_compose(const Perm4& a, const Perm4& b) {
    // (a b)(k) = a(b(k))
    return {a[b[0]], a[b[1]], a[b[2]], a[b[3]]};
}

inline Perm4 perm4_inverse(const Perm4& a) {
    Perm4 r{};
    for (int k = 0; k < 4; ++k) r[a[k]] = k;
    return r;
}

inline bool perm4_even(const Perm4& a) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) inversions += a[i] > a[j];
    return inversions % 2 == 0;
}

/// gamma |> (x,y,z): permute the running-product tuple (1, x, xy, xyz) by
/// gamma^-1 on positions and read off consecutive quotients.
inline Triple s4_act(const FiniteGroup& G, const Perm4& gamma, const Triple& t) {
    std::array<int, 4> u{0, t[0], G.mul(t[0], t[1]), 0};
    u[3] = G.mul(u[2], t[2]);
    Perm4 gi = perm4_inverse(gamma);
    std::array<int, 4> v{u[gi[0]], u[gi[1]], u[gi[2]], u[gi[3]]};
    return {G.mul(G.inv(v[0]), v[1]), G.mul(G.inv(v[1]), v[2]), G.mul(G.inv(v[2]), v[3])};
}

struct S4Report {
    long long checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void fail(std::string w) {
        if (failures.size() < 32) failures.push_back(std::move(w));
    }
};

/// gamma |> (delta |> X) = (gamma delta) |> X over all of S4 x S4 x G^3.
inline S4Report verify_action(const FiniteGroup& G, int workers = 1) {
    S4Report rep;
    auto perms = all_perm4();
    long long n = G.order();
    long long total = static_cast<long long>(perms.size()) * perms.size() * n * n * n;
    std::vector<S4Report> local(std::max(1, workers));
    parallel_blocks(total, workers, [&](long long lo, long long hi, int w) {
        for (long long t = lo; t < hi; ++t) {
            long long rest = t;
            int pz = static_cast<int>(rest % n);
            rest /= n;
            int py = static_cast<int>(rest % n);
            rest /= n;
            int px = static_cast<int>(rest % n);
            rest /= n;
            int pd = static_cast<int>(rest % static_cast<long long>(perms.size()));
            int pg = static_cast<int>(rest / static_cast<long long>(perms.size()));
            Triple X{px, py, pz};
            ++local[w].checks;
            Triple one_step = s4_act(G, perm4_compose(perms[pg], perms[pd]), X);
            Triple two_step = s4_act(G, perms[pg], s4_act(G, perms[pd], X));
            if (one_step != two_step)
                local[w].fail("action composition fails at perms " + std::to_string(pg) + "," +
                              std::to_string(pd));
        }
    });
    for (auto& l : local) {
        rep.checks += l.checks;
        for (auto& f : l.failures) rep.fail(std::move(f));
    }
    return rep;
}

struct InvarianceReport {
    long long triples = 0;
    long long even_checks = 0;
    long long odd_checks = 0;
    long long zero_checks = 0;
    std::array<long long, 24> per_perm_checks{};
    std::array<long long, 24> per_perm_failures{};
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void fail(std::string w) {
        if (failures.size() < 32) failures.push_back(std::move(w));
    }
};

/// For normalized sigma: even permutations preserve the coboundary value,
/// odd ones invert nonzero values, zeros are preserved, and the value-1
/// locus is invariant. Requires is_normalized(sigma); membership is the
/// caller's responsibility.
inline InvarianceReport verify_invariance(const FactorSet& sigma, int workers = 1) {
    if (!is_normalized(sigma))
        throw PreconditionFailed("sigma(g,g^-1) must lie in {0,1}");
    const FiniteGroup& G = sigma.group();
    auto perms = all_perm4();
    std::vector<bool> even(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) even[i] = perm4_even(perms[i]);
    long long n = G.order();
    InvarianceReport rep;
    std::vector<InvarianceReport> local(std::max(1, workers));
    parallel_blocks(n * n * n, workers, [&](long long lo, long long hi, int w) {
        for (long long t = lo; t < hi; ++t) {
            Triple X{static_cast<int>(t / (n * n)), static_cast<int>((t / n) % n),
                     static_cast<int>(t % n)};
            FieldScalar d = coboundary_defect(sigma, X[0], X[1], X[2]);
            ++local[w].triples;
            for (std::size_t p = 0; p < perms.size(); ++p) {
                Triple Y = s4_act(G, perms[p], X);
                FieldScalar dy = coboundary_defect(sigma, Y[0], Y[1], Y[2]);
                ++local[w].zero_checks;
                ++local[w].per_perm_checks[p];
                if (d.is_zero() != dy.is_zero()) {
                    ++local[w].per_perm_failures[p];
                    local[w].fail("zero locus not preserved");
                    continue;
                }
                if (d.is_zero()) continue;
                bool bad = false;
                if (even[p]) {
                    ++local[w].even_checks;
                    bad = !(dy == d);
                    if (bad) local[w].fail("even permutation changed the value");
                } else {
                    ++local[w].odd_checks;
                    bad = !(dy == d.inv());
                    if (bad) local[w].fail("odd permutation did not invert");
                }
                if (d.is_one() != dy.is_one()) {
                    bad = true;
                    local[w].fail("value-1 locus not preserved");
                }
                if (bad) ++local[w].per_perm_failures[p];
            }
        }
    });
    for (auto& l : local) {
        rep.triples += l.triples;
        rep.even_checks += l.even_checks;
        rep.odd_checks += l.odd_checks;
        rep.zero_checks += l.zero_checks;
        for (int p = 0; p < 24; ++p) {
            rep.per_perm_checks[p] += l.per_perm_checks[p];
            rep.per_perm_failures[p] += l.per_perm_failures[p];
        }
        for (auto& f : l.failures) rep.fail(std::move(f));
    }
    return rep;
}

inline std::string perm4_str(const Perm4& p) {
    std::string out;
    for (int v : p) out += static_cast<char>('0' + v);
    return out;
}

/// Independent route to the orbit of X: read consecutive quotients off
/// every position-permutation of the running-product tuple.
inline std::vector<Triple> orbit_by_tuple_permutations(const FiniteGroup& G, const Triple& t) {
    std::array<int, 4> u{0, t[0], G.mul(t[0], t[1]), 0};
    u[3] = G.mul(u[2], t[2]);
    std::array<int, 4> pos{0, 1, 2, 3};
    std::vector<Triple> out;
    do {
        std::array<int, 4> v{u[pos[0]], u[pos[1]], u[pos[2]], u[pos[3]]};
        out.push_back({G.mul(G.inv(v[0]), v[1]), G.mul(G.inv(v[1]), v[2]),
                       G.mul(G.inv(v[2]), v[3])});
    } while (std::next_permutation(pos.begin(), pos.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace kpar
