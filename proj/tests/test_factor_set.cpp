#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "kpar/membership.hpp"

using namespace kpar;

TEST_CASE("basic axioms accept honest tables and flag broken ones") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    Field q = Field::rationals();

    CHECK(check_basic_axioms(FactorSet::ones(c2, q)).empty());

    FactorSet no_unit = FactorSet::ones(c2, q);
    no_unit.set(0, 0, FieldScalar::zero(q));
    auto v = check_basic_axioms(no_unit);
    REQUIRE(!v.empty());
    CHECK(v.front().rule == 1);

    // sigma(a,a) = 1 with an asymmetric sigma(a,1) pattern.
    auto broken = check_basic_axioms(fixtures::broken_pattern_c2(c2, q));
    REQUIRE(!broken.empty());
    CHECK(broken.front().rule == 2);
}

TEST_CASE("pointwise product") {
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    Field q = Field::rationals();
    FactorSet ones = FactorSet::ones(c4, q);
    FactorSet n = FactorSet::subgroup_indicator(c4, q, 0b0101);

    CHECK(pm_product(n, ones) == n);
    CHECK(pm_product(n, n) == n); // idempotent

    FiniteGroup d4 = FiniteGroup::dihedral(4);
    FactorSet diag = diagonal(d4, q, d4.subgroup_generated({2}) & ~Mask(1));
    std::set<GPair> w{{1, 1}};
    for (auto p : orbit_c(d4, 1, 1)) w.insert(p);
    FactorSet lat = lateral(d4, q, w);
    FactorSet prod = pm_product(diag, lat);
    for (int g = 0; g < d4.order(); ++g)
        for (int h = 0; h < d4.order(); ++h)
            CHECK(prod.at(g, h).is_zero() ==
                  (diag.at(g, h).is_zero() || lat.at(g, h).is_zero()));

    FiniteGroup c2 = FiniteGroup::cyclic(2);
    CHECK_THROWS_AS(pm_product(ones, FactorSet::ones(c2, q)), GroupMismatch);
    CHECK_THROWS_AS(pm_product(ones, FactorSet::ones(c4, Field::gf(7))), FieldMismatch);
}

TEST_CASE("total cocycle and normalization predicates") {
    Field f7 = Field::gf(7);
    FiniteGroup klein = FiniteGroup::klein();

    CHECK(is_total_cocycle(FactorSet::ones(klein, f7)));
    CHECK(is_normalized(FactorSet::ones(klein, f7)));

    FactorSet bil = fixtures::bilinear_klein(klein, f7);
    CHECK(is_total_cocycle(bil));
    CHECK(!is_normalized(bil)); // sigma(pq, pq) = -1

    // lambda = 2 has order 3 mod 7, so the bilinear formula fails the
    // cocycle identity on a group of exponent 2.
    CHECK(!is_total_cocycle(fixtures::pseudo_bilinear_klein(klein, f7)));

    FiniteGroup c9 = fixtures::c3_times_c3();
    FactorSet norm = fixtures::normalized_bilinear_c3c3(c9, f7);
    CHECK(is_total_cocycle(norm));
    CHECK(is_normalized(norm));

    FiniteGroup c4 = FiniteGroup::cyclic(4);
    CHECK(!is_total_cocycle(FactorSet::subgroup_indicator(c4, f7, 0b0101)));
}

TEST_CASE("membership oracle") {
    Field q = Field::rationals();
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    FiniteGroup c4 = FiniteGroup::cyclic(4);

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(validate_membership(FactorSet::ones(c2, q)).member);
    CHECK(validate_membership(FactorSet::ones(s3, q)).member);
    CHECK(validate_membership(FactorSet::subgroup_indicator(c4, q, 0b0101)).member);

    auto cert = validate_membership(fixtures::fake_member_c2(c2, q));
    CHECK(!cert.member);
    REQUIRE(!cert.violations.empty());
    CHECK(cert.violations.front().axiom == 2); // product vanished, sigma(a,a) != 0

    CHECK(!validate_membership(fixtures::zero_diagonal_c2(c2, q)).member);
    CHECK(!validate_membership(fixtures::broken_cocycle_c4(c4, q)).member);
    FiniteGroup klein = FiniteGroup::klein();
    CHECK(!validate_membership(fixtures::pseudo_bilinear_klein(klein, Field::gf(7))).member);

    // Classical twisted class: sigma(a,a) = t is a genuine member on C2.
    FactorSet twisted = FactorSet::ones(c2, q);
    twisted.set(1, 1, FieldScalar::from_int(q, 2));
    CHECK(validate_membership(twisted).member);
}

TEST_CASE("the pointwise product is commutative and associative") {
    std::mt19937_64 rng(19);
    Field q = Field::rationals();
    FiniteGroup d4 = FiniteGroup::dihedral(4);
    for (int t = 0; t < 10; ++t) {
        FactorSet a = general(d4, q, fixtures::random_general_pairs(d4, rng, 2), false);
        FactorSet b = general(d4, q, fixtures::random_general_pairs(d4, rng, 2), false);
        FactorSet c = general(d4, q, fixtures::random_general_pairs(d4, rng, 2), false);
        CHECK(pm_product(a, b) == pm_product(b, a));
        CHECK(pm_product(pm_product(a, b), c) == pm_product(a, pm_product(b, c)));
    }
}

TEST_CASE("idempotent membership coincides with null-set regeneration") {
    // Independent oracle for 0/1 tables: such a table is a factor set
    // exactly when the generator built from its zero pairs reproduces it.
    Field q = Field::rationals();
    auto cross_check = [&](const FiniteGroup& g, const FactorSet& s) {
        if (!check_basic_axioms(s).empty()) return;
        bool member = validate_membership(s).member;
        bool regenerated = general(g, q, null_set(s), false) == s;
        CHECK(member == regenerated);
    };

    // Exhaustive over all 0/1 tables on the groups of order 2 and 3.
    for (int order : {2, 3}) {
        FiniteGroup g = FiniteGroup::cyclic(order);
        int cells = order * order;
        for (unsigned bits = 0; bits < (1u << cells); ++bits) {
            FactorSet s(g, q);
            for (int c = 0; c < cells; ++c)
                s.set(c / order, c % order,
                      bits >> c & 1 ? FieldScalar::one(q) : FieldScalar::zero(q));
            cross_check(g, s);
        }
    }

    // Sampled 0/1 tables on the order-4 groups.
    std::mt19937_64 rng(23);
    for (const FiniteGroup& g : {FiniteGroup::cyclic(4), FiniteGroup::klein()}) {
        for (int t = 0; t < 300; ++t) {
            FactorSet s(g, q);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    s.set(a, b, rng() % 3 ? FieldScalar::one(q) : FieldScalar::zero(q));
            cross_check(g, s);
        }
    }
}

TEST_CASE("membership is closed under the pointwise product") {
    std::mt19937_64 rng(11);
    Field q = Field::rationals();
    for (const FiniteGroup& g : {FiniteGroup::klein(), FiniteGroup::symmetric(3)}) {
        for (int t = 0; t < 8; ++t) {
            FactorSet a = general(g, q, fixtures::random_general_pairs(g, rng, 2));
            FactorSet b = general(g, q, fixtures::random_general_pairs(g, rng, 2));
            CHECK(validate_membership(pm_product(a, b)).member);
        }
    }
}
