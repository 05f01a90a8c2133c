#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kpar/errors.hpp"

namespace kpar {

/// Word of the infinite dihedral group in normal form b^refl a^k.
struct DWord {
    int refl = 0; // 0 or 1
    long long k = 0;

    friend auto operator<=>(const DWord&, const DWord&) = default;

    std::string str() const {
        if (refl == 0 && k == 0) return "1";
        std::string out = refl ? "b" : "";
        if (k != 0) out += "a^" + std::to_string(k);
        return out;
    }
};

inline DWord d_identity() { return DWord{0, 0}; }

/// b^e1 a^k1 * b^e2 a^k2 = b^(e1^e2) a^((-1)^e2 k1 + k2).
inline DWord d_mul(const DWord& x, const DWord& y) {
    return DWord{x.refl ^ y.refl, (y.refl ? -x.k : x.k) + y.k};
}

inline DWord d_inv(const DWord& x) {
    return x.refl ? x : DWord{0, -x.k};
}

/// Finite zero-set data for an idempotent factor set of the infinite
/// dihedral group: the four indicator functions are 1 off these sets.
struct DInfGenerator {
    std::set<long long> nu0_zeros;                      // positive integers
    std::set<long long> nu1_zeros;                      // integers
    std::set<std::pair<long long, long long>> omega0_zeros; // Z+ x Z+
    std::set<std::pair<long long, long long>> omega1_zeros; // Z+ x Z

    void validate() const {
        for (long long v : nu0_zeros)
            if (v < 1) throw InvalidGenerator("nu0 zeros must be positive");
        for (const auto& [n, m] : omega0_zeros)
            if (n < 1 || m < 1) throw InvalidGenerator("omega0 zeros must be positive pairs");
        for (const auto& [i, j] : omega1_zeros)
            if (i < 1) throw InvalidGenerator("omega1 zeros need a positive first entry");
    }
};

/// Membership in the symmetric diagonal set S determined by nu.
inline bool dinf_in_diag_set(const DInfGenerator& gen, const DWord& w) {
    if (w.refl == 0) return w.k != 0 && gen.nu0_zeros.count(w.k < 0 ? -w.k : w.k) != 0;
    return gen.nu1_zeros.count(w.k) != 0;
}

/// Diagonal part: zero iff {x, y, xy} meets the diagonal set.
inline bool dinf_sigma_diag(const DInfGenerator& gen, const DWord& x, const DWord& y) {
    return !(dinf_in_diag_set(gen, x) || dinf_in_diag_set(gen, y) ||
             dinf_in_diag_set(gen, d_mul(x, y)));
}

inline std::array<std::pair<DWord, DWord>, 6> dinf_orbit(const DWord& a, const DWord& b) {
    DWord ai = d_inv(a), bi = d_inv(b);
    DWord ab = d_mul(a, b), biai = d_inv(ab);
    return {std::pair{a, b},   {biai, a}, {b, biai},
            std::pair{bi, ai}, {ai, ab},  {ab, bi}};
}

/// Whether a single pair is one of the canonical lateral zeros: (a^n, a^m)
/// with n, m > 0, or (a^i, b a^j) with i > 0.
inline bool dinf_in_lateral_set(const DInfGenerator& gen, const DWord& x, const DWord& y) {
    if (x.refl != 0 || x.k < 1) return false;
    if (y.refl == 0) return y.k >= 1 && gen.omega0_zeros.count({x.k, y.k}) != 0;
    return gen.omega1_zeros.count({x.k, y.k}) != 0;
}

/// Lateral part: zero iff the six-element orbit of (x, y) meets the zero
/// data in canonical form.
inline bool dinf_sigma_lateral(const DInfGenerator& gen, const DWord& x, const DWord& y) {
    for (const auto& [u, v] : dinf_orbit(x, y)) {
        if (dinf_in_lateral_set(gen, u, v)) return false;
    }
    return true;
}

/// The generated idempotent factor set, evaluated at one pair.
inline bool dinf_sigma_eval(const DInfGenerator& gen, const DWord& x, const DWord& y) {
    return dinf_sigma_diag(gen, x, y) && dinf_sigma_lateral(gen, x, y);
}

namespace detail {

template <class SigmaEval>
bool dinf_set_in_omega(const std::vector<DWord>& xi, SigmaEval sigma) {
    // Every contained type-I prohibition {h, hg, hgs} arises as an ordered
    // triple (h, hg, hgs) of elements of xi.
    for (const DWord& u : xi) {
        for (const DWord& v : xi) {
            DWord g = d_mul(d_inv(u), v);
            for (const DWord& w : xi) {
                DWord s = d_mul(d_inv(v), w);
                if (!sigma(g, s)) return false;
            }
        }
    }
    return true;
}

inline std::vector<DWord> window_elements(long long n) {
    std::vector<DWord> out;
    for (int refl = 0; refl <= 1; ++refl) {
        for (long long k = -n; k <= n; ++k) out.push_back(DWord{refl, k});
    }
    return out;
}

} // namespace detail

/// Brute-force agreement, within the exponent window, between the
/// closed-form classification of type-I prohibitions (three diagonal pair
/// families, four lateral triple families) and direct scanning through the
/// generated factor set.
inline bool window_prohibition_check(const DInfGenerator& gen, long long n,
                                     std::vector<std::string>* failures = nullptr) {
    gen.validate();
    auto say = [&](std::string w) {
        if (failures && failures->size() < 16) failures->push_back(std::move(w));
    };
    auto window = detail::window_elements(n);
    bool ok = true;

    auto diag = [&](const DWord& x, const DWord& y) { return dinf_sigma_diag(gen, x, y); };
    auto lat = [&](const DWord& x, const DWord& y) { return dinf_sigma_lateral(gen, x, y); };
    auto both = [&](const DWord& x, const DWord& y) { return dinf_sigma_eval(gen, x, y); };

    // Pairs against the diagonal classification.
    for (std::size_t i = 0; i < window.size(); ++i) {
        for (std::size_t j = i + 1; j < window.size(); ++j) {
            const DWord &w1 = window[i], &w2 = window[j];
            bool expected;
            if (w1.refl == w2.refl) {
                long long d = w1.k - w2.k;
                expected = gen.nu0_zeros.count(d < 0 ? -d : d) != 0;
            } else {
                const DWord& apart = w1.refl == 0 ? w1 : w2;
                const DWord& bpart = w1.refl == 0 ? w2 : w1;
                expected = gen.nu1_zeros.count(apart.k + bpart.k) != 0;
            }
            bool direct = !detail::dinf_set_in_omega({w1, w2}, diag);
            if (expected != direct) {
                ok = false;
                say("diagonal pair classification disagrees at {" + w1.str() + "," + w2.str() +
                    "}");
            }
            // Lateral zeros never exclude a two-element set.
            if (!detail::dinf_set_in_omega({w1, w2}, lat)) {
                ok = false;
                say("lateral zero excluded a pair at {" + w1.str() + "," + w2.str() + "}");
            }
        }
    }

    // Triples against the lateral families.
    for (std::size_t i = 0; i < window.size(); ++i) {
        for (std::size_t j = i + 1; j < window.size(); ++j) {
            for (std::size_t l = j + 1; l < window.size(); ++l) {
                std::array<DWord, 3> t{window[i], window[j], window[l]};
                std::vector<long long> a_exp, b_exp;
                for (const auto& w : t) (w.refl ? b_exp : a_exp).push_back(w.k);
                std::sort(a_exp.begin(), a_exp.end());
                std::sort(b_exp.begin(), b_exp.end());
                bool expected = false;
                if (a_exp.size() == 3) {
                    expected = gen.omega0_zeros.count(
                                   {a_exp[1] - a_exp[0], a_exp[2] - a_exp[1]}) != 0;
                } else if (b_exp.size() == 3) {
                    expected = gen.omega0_zeros.count(
                                   {b_exp[1] - b_exp[0], b_exp[2] - b_exp[1]}) != 0;
                } else if (a_exp.size() == 2) {
                    expected = gen.omega1_zeros.count(
                                   {a_exp[1] - a_exp[0], b_exp[0] + a_exp[1]}) != 0;
                } else {
                    expected = gen.omega1_zeros.count(
                                   {b_exp[1] - b_exp[0], a_exp[0] + b_exp[1]}) != 0;
                }
                bool direct = !detail::dinf_set_in_omega({t[0], t[1], t[2]}, lat);
                if (expected != direct) {
                    ok = false;
                    say("lateral triple classification disagrees at {" + t[0].str() + "," +
                        t[1].str() + "," + t[2].str() + "}");
                }
                // Combined exclusion is the union of the two mechanisms.
                bool diag_excl = !detail::dinf_set_in_omega({t[0], t[1], t[2]}, diag);
                bool all_excl = !detail::dinf_set_in_omega({t[0], t[1], t[2]}, both);
                if (all_excl != (diag_excl || direct)) {
                    ok = false;
                    say("product exclusion is not the union of the parts");
                }
            }
        }
    }
    return ok;
}

/// xi_I^l = {a^i : i in I} + {b a^(i+l) : i in I}.
inline std::vector<DWord> dinf_fixed_point_set(const std::vector<long long>& I, long long l) {
    std::vector<DWord> xi;
    for (long long i : I) xi.push_back(DWord{0, i});
    for (long long i : I) xi.push_back(DWord{1, i + l});
    std::sort(xi.begin(), xi.end());
    xi.erase(std::unique(xi.begin(), xi.end()), xi.end());
    return xi;
}

struct DualRoute {
    bool by_conditions = false;
    bool by_fixed_point = false;
    bool agree() const { return by_conditions == by_fixed_point; }
};

/// I in Delta^l_nu, by the quantified conditions and independently by
/// scanning xi_I^l against the diagonal factor set.
inline DualRoute delta_membership(const DInfGenerator& gen, long long l,
                                  const std::vector<long long>& I) {
    if (std::find(I.begin(), I.end(), 0) == I.end()) throw MissingZero();
    DualRoute r;
    r.by_conditions = true;
    for (long long p : I) {
        for (long long q : I) {
            if (p != q && gen.nu0_zeros.count(p > q ? p - q : q - p)) r.by_conditions = false;
            if (gen.nu1_zeros.count(p + q + l)) r.by_conditions = false;
        }
    }
    r.by_fixed_point = detail::dinf_set_in_omega(
        dinf_fixed_point_set(I, l),
        [&](const DWord& x, const DWord& y) { return dinf_sigma_diag(gen, x, y); });
    return r;
}

/// I in Lambda^l_omega, same dual-route arrangement for the lateral part.
inline DualRoute lambda_membership(const DInfGenerator& gen, long long l,
                                   const std::vector<long long>& I) {
    if (std::find(I.begin(), I.end(), 0) == I.end()) throw MissingZero();
    std::vector<long long> s(I.begin(), I.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    DualRoute r;
    r.by_conditions = true;
    for (std::size_t x = 0; x < s.size(); ++x) {
        for (std::size_t y = x + 1; y < s.size(); ++y) {
            for (std::size_t z = y + 1; z < s.size(); ++z) {
                if (gen.omega0_zeros.count({s[y] - s[x], s[z] - s[y]})) r.by_conditions = false;
            }
            for (long long z : s) {
                if (gen.omega1_zeros.count({s[y] - s[x], z + s[y] + l})) r.by_conditions = false;
            }
        }
    }
    r.by_fixed_point = detail::dinf_set_in_omega(
        dinf_fixed_point_set(I, l),
        [&](const DWord& x, const DWord& y) { return dinf_sigma_lateral(gen, x, y); });
    return r;
}

struct DInfCertificate {
    bool ok = false;
    long long window = 0;
    std::vector<DWord> point;              // the fixed point xi
    std::vector<DWord> blocked;            // predicted inadmissible elements
    std::vector<DWord> witnesses;          // admissible elements found in the window
    bool formula_agrees = true;            // formula vs direct scan, inside the window
    std::string note;
};

/// Certifies that the fixed point xi_I^l is not isolated: the predicted
/// inadmissible set (finite, from the closed-form complements) is exceeded
/// by admissible witnesses found inside the exponent window.
inline DInfCertificate freeness_certificate(const DInfGenerator& gen, long long l,
                                            const std::vector<long long>& I, long long n) {
    gen.validate();
    auto delta = delta_membership(gen, l, I);
    auto lambda = lambda_membership(gen, l, I);
    if (!(delta.by_fixed_point && lambda.by_fixed_point)) throw NotAFixedPoint();

    DInfCertificate cert;
    cert.window = n;
    cert.point = dinf_fixed_point_set(I, l);
    const auto& xi = cert.point;
    auto in_xi = [&](const DWord& w) {
        return std::binary_search(xi.begin(), xi.end(), w);
    };

    std::set<DWord> blocked;
    // Diagonal complement: {x g : x in xi, g in S}.
    std::vector<DWord> diag_set;
    for (long long i : gen.nu0_zeros) {
        diag_set.push_back(DWord{0, i});
        diag_set.push_back(DWord{0, -i});
    }
    for (long long j : gen.nu1_zeros) diag_set.push_back(DWord{1, j});
    for (const DWord& x : xi) {
        for (const DWord& g : diag_set) {
            DWord w = d_mul(x, g);
            if (!in_xi(w)) blocked.insert(w);
        }
    }
    // Lateral complement: the three completion families over the zero data.
    std::vector<std::pair<DWord, DWord>> wpairs;
    for (const auto& [a, b] : gen.omega0_zeros) wpairs.push_back({DWord{0, a}, DWord{0, b}});
    for (const auto& [a, b] : gen.omega1_zeros) wpairs.push_back({DWord{0, a}, DWord{1, b}});
    for (const auto& [x, y] : wpairs) {
        for (const DWord& h : xi) {
            DWord hx = d_mul(h, x), hxy = d_mul(d_mul(h, x), y);
            if (in_xi(hx) && !in_xi(hxy)) blocked.insert(hxy);
            if (in_xi(hxy) && !in_xi(hx)) blocked.insert(hx);
        }
        for (const DWord& v : xi) {
            DWord h = d_mul(v, d_inv(x)); // h with hx = v
            DWord hxy = d_mul(v, y);
            if (in_xi(hxy) && !in_xi(h)) blocked.insert(h);
        }
    }
    cert.blocked.assign(blocked.begin(), blocked.end());

    auto sigma = [&](const DWord& x, const DWord& y) { return dinf_sigma_eval(gen, x, y); };
    for (const DWord& w : detail::window_elements(n)) {
        if (in_xi(w)) continue;
        std::vector<DWord> grown = xi;
        grown.push_back(w);
        bool admissible = detail::dinf_set_in_omega(grown, sigma);
        if (admissible != !blocked.count(w)) cert.formula_agrees = false;
        if (admissible) cert.witnesses.push_back(w);
    }
    cert.ok = cert.formula_agrees &&
              static_cast<long long>(cert.witnesses.size()) >
                  static_cast<long long>(cert.blocked.size());
    if (!cert.ok && cert.formula_agrees)
        cert.note = "window too small to exceed the predicted complement";
    return cert;
}

} // namespace kpar
