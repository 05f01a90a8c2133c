#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "kpar/errors.hpp"

namespace kpar {

/// Subset of group elements as a bitmask over element indices.
/// The identity always has index 0, so "contains the identity" is bit 0.
using Mask = std::uint64_t;

inline int mask_size(Mask m) { return std::popcount(m); }
inline bool mask_contains(Mask m, int g) { return (m >> g) & 1u; }
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    for (int g = 0; m; ++g, m >>= 1) {
        if (m & 1u) out.push_back(g);
    }
    return out;
}

// Orders subsets by size first, then by mask value; used everywhere a
// deterministic listing of subsets is needed.
inline bool mask_less(Mask a, Mask b) {
    int sa = mask_size(a), sb = mask_size(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

/// Finite group given by its Cayley table. Index 0 is the two-sided
/// identity; the table is validated on construction.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> names = {}) {
        FiniteGroup g;
        g.table_ = std::move(table);
        g.names_ = std::move(names);
        g.reindex_identity();
        g.validate();
        return g;
    }

    static FiniteGroup cyclic(int n) {
        require_order(n);
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        std::vector<std::string> names(n);
        for (int i = 0; i < n; ++i) {
            names[i] = std::to_string(i);
            for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        }
        return from_table(std::move(t), std::move(names));
    }

    // Order 2n: indices 0..n-1 are rotations a^k, n..2n-1 reflections b a^k.
    static FiniteGroup dihedral(int n) {
        require_order(n);
        int m = 2 * n;
        std::vector<std::vector<int>> t(m, std::vector<int>(m));
        std::vector<std::string> names(m);
        auto idx = [n](int refl, int k) { return refl * n + ((k % n + n) % n); };
        for (int i = 0; i < m; ++i) {
            int r1 = i / n, k1 = i % n;
            names[i] = (r1 ? "b" : "") + std::string("a^") + std::to_string(k1);
            for (int j = 0; j < m; ++j) {
                int r2 = j / n, k2 = j % n;
                // b^r1 a^k1 * b^r2 a^k2 = b^(r1^r2) a^((-1)^r2 k1 + k2)
                t[i][j] = idx(r1 ^ r2, (r2 ? -k1 : k1) + k2);
            }
        }
        return from_table(std::move(t), std::move(names));
    }

    // Permutations of {0..n-1} in lexicographic order, so the identity
    // lands at index 0. Composition acts on the left: (p*q)(i) = p(q(i)).
    static FiniteGroup symmetric(int n) {
        require_order(n);
        if (n > 4) throw CapExceeded("symmetric group parameter too large");
        std::vector<std::vector<int>> perms;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        std::map<std::vector<int>, int> index;
        for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
        int m = static_cast<int>(perms.size());
        std::vector<std::vector<int>> t(m, std::vector<int>(m));
        std::vector<std::string> names(m);
        for (int i = 0; i < m; ++i) {
            std::string nm = "(";
            for (int v : perms[i]) nm += std::to_string(v);
            names[i] = nm + ")";
            for (int j = 0; j < m; ++j) {
                std::vector<int> c(n);
                for (int k = 0; k < n; ++k) c[k] = perms[i][perms[j][k]];
                t[i][j] = index[c];
            }
        }
        return from_table(std::move(t), std::move(names));
    }

    static FiniteGroup klein() {
        std::vector<std::vector<int>> t(4, std::vector<int>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
        return from_table(std::move(t), {"1", "p", "q", "pq"});
    }

    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    Mask full_mask() const {
        return order() == 64 ? ~Mask(0) : (Mask(1) << order()) - 1;
    }

    /// Left translation {g*s : s in S}.
    Mask translate(Mask s, int g) const {
        Mask out = 0;
        for (int e = 0; s; ++e, s >>= 1) {
            if (s & 1u) out |= Mask(1) << mul(g, e);
        }
        return out;
    }

    /// Closure of the generators together with the identity.
    Mask subgroup_generated(const std::vector<int>& gens) const {
        Mask closed = 1;
        std::vector<int> frontier{0};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier) {
                for (int g : gens) {
                    for (int y : {mul(x, g), mul(x, inv(g))}) {
                        if (!mask_contains(closed, y)) {
                            closed |= Mask(1) << y;
                            next.push_back(y);
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
        return closed;
    }

    bool is_subgroup(Mask m) const {
        if (!mask_contains(m, 0)) return false;
        for (int a : mask_elements(m)) {
            if (!mask_contains(m, inv(a))) return false;
            for (int b : mask_elements(m)) {
                if (!mask_contains(m, mul(a, b))) return false;
            }
        }
        return true;
    }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<std::string> names_;

    static void require_order(int n) {
        if (n < 1) throw NotAGroup("order parameter must be positive");
    }

    void reindex_identity() {
        int n = static_cast<int>(table_.size());
        if (n == 0) throw NotAGroup("empty table");
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
            for (int v : row) {
                if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
            }
        }
        int e = -1;
        for (int cand = 0; cand < n; ++cand) {
            bool ok = true;
            for (int g = 0; g < n && ok; ++g) {
                ok = table_[cand][g] == g && table_[g][cand] == g;
            }
            if (ok) {
                e = cand;
                break;
            }
        }
        if (e < 0) throw NotAGroup("no two-sided identity");
        if (e != 0) {
            // Swap labels 0 and e so the identity sits at index 0.
            auto relabel = [&](int v) { return v == e ? 0 : v == 0 ? e : v; };
            std::vector<std::vector<int>> t(n, std::vector<int>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    t[relabel(i)][relabel(j)] = relabel(table_[i][j]);
            table_ = std::move(t);
            if (!names_.empty()) std::swap(names_[0], names_[e]);
        }
        if (names_.empty()) {
            names_.resize(n);
            for (int i = 0; i < n; ++i) names_[i] = "g" + std::to_string(i);
        }
        if (static_cast<int>(names_.size()) != n) throw NotAGroup("wrong number of names");
    }

    void validate() {
        int n = order();
        if (n > 64) throw NotAGroup("orders above 64 are not supported");
        inv_.assign(n, -1);
        for (int g = 0; g < n; ++g) {
            for (int h = 0; h < n; ++h) {
                if (table_[g][h] == 0 && table_[h][g] == 0) {
                    inv_[g] = h;
                    break;
                }
            }
            if (inv_[g] < 0) throw NotAGroup("no inverse for element " + std::to_string(g));
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
    }
};

/// Group-aware view of a Mask; the API type for subsets of G.
struct SubsetMask {
    const FiniteGroup* group = nullptr;
    Mask bits = 0;

    bool contains(int g) const { return mask_contains(bits, g); }
    int size() const { return mask_size(bits); }
    std::vector<int> elements() const { return mask_elements(bits); }

    friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
        return a.bits == b.bits;
    }

    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (int g : elements()) {
            if (!first) out += ",";
            out += group ? group->name(g) : std::to_string(g);
            first = false;
        }
        return out + "}";
    }
};

inline SubsetMask translate(const SubsetMask& s, int g) {
    return SubsetMask{s.group, s.group->translate(s.bits, g)};
}

inline SubsetMask subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
    return SubsetMask{&g, g.subgroup_generated(gens)};
}

} // namespace kpar
