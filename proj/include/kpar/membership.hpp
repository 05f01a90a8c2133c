#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpar/algebra.hpp"
#include "kpar/factor_set.hpp"
#include "kpar/spectrum.hpp"

namespace kpar {

struct AxiomViolation {
    int axiom; // 0: basic table identity, 1..5: representation postulate
    int g, h;
    std::string what;
};

struct MembershipCertificate {
    bool member = false;
    std::vector<AxiomViolation> violations;
};

/// Decides membership of sigma in pm(G) by realizing the candidate algebra
/// on the (U, g) basis cut out by sigma's prohibitions, sending each group
/// element to chi({1,g}) ({1,g}, g), and checking the five representation
/// postulates for every pair. Holding postulates exhibit sigma as the
/// factor set of that representation; a genuine factor set satisfies them
/// because the generator relations hold in the realized algebra.
inline MembershipCertificate validate_membership(const FactorSet& sigma,
                                                 int order_cap = kDefaultOrderCap) {
    MembershipCertificate cert;
    for (const auto& v : check_basic_axioms(sigma)) {
        cert.violations.push_back({0, v.g, v.h, v.what});
    }
    if (!cert.violations.empty()) return cert;

    Spectrum sp(sigma, order_cap, ScanOptions{ScanOptions::Type2::on});
    const FiniteGroup& G = sigma.group();
    int n = G.order();
    std::vector<AlgebraElement> pi(n);
    for (int g = 0; g < n; ++g) pi[g] = gen(sp, g);

    auto fail = [&](int axiom, int g, int h, std::string what) {
        if (cert.violations.size() < 64) cert.violations.push_back({axiom, g, h, std::move(what)});
    };

    if (!(pi[0] == a_unit(sp))) fail(3, 0, 0, "the identity is not sent to the unit");

    for (int g = 0; g < n; ++g) {
        int gi = G.inv(g);
        for (int h = 0; h < n; ++h) {
            int hi = G.inv(h), gh = G.mul(g, h);
            const FieldScalar& v = sigma.at(g, h);
            if (v.is_zero()) {
                if (!a_mul(sp, pi[gi], pi[gh]).is_zero() ||
                    !a_mul(sp, pi[gh], pi[hi]).is_zero())
                    fail(1, g, h, "sigma(g,h)=0 but the gated products do not vanish");
            }
            if (a_mul(sp, pi[g], pi[h]).is_zero() && !v.is_zero())
                fail(2, g, h, "product vanishes but sigma(g,h) != 0");
            AlgebraElement lhs = a_mul(sp, a_mul(sp, pi[gi], pi[g]), pi[h]);
            AlgebraElement rhs = a_mul(sp, pi[gi], pi[gh]).scaled(v);
            if (!(lhs == rhs)) fail(4, g, h, "left absorption postulate fails");
            lhs = a_mul(sp, a_mul(sp, pi[g], pi[h]), pi[hi]);
            rhs = a_mul(sp, pi[gh], pi[hi]).scaled(v);
            if (!(lhs == rhs)) fail(5, g, h, "right absorption postulate fails");
        }
    }
    cert.member = cert.violations.empty();
    return cert;
}

} // namespace kpar
