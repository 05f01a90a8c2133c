#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "kpar/algebra.hpp"
#include "kpar/membership.hpp"

using namespace kpar;

namespace {

AlgebraElement random_element(const Spectrum& sp, std::mt19937_64& rng) {
    auto keys = detail::basis_keys(sp);
    AlgebraElement x;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        const BasisKey& k = keys[rng() % keys.size()];
        long long c = 1 + static_cast<long long>(rng() % 5);
        x.add_term(k, FieldScalar::from_int(sp.field(), c));
    }
    return x;
}

} // namespace

TEST_CASE("unit and generators") {
    Field q = Field::rationals();
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    Spectrum sp(FactorSet::ones(c2, q));

    CHECK(gen(sp, 0) == a_unit(sp));
    CHECK(gen(sp, 1) == AlgebraElement::term(FieldScalar::one(q), 0b11, 1));

    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        AlgebraElement x = random_element(sp, rng);
        CHECK(a_mul(sp, x, a_unit(sp)) == x);
        CHECK(a_mul(sp, a_unit(sp), x) == x);
    }

    // Vanishing inverse pair kills the generator.
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    Spectrum sn(FactorSet::subgroup_indicator(c4, q, Mask(1)));
    CHECK(gen(sn, 1).is_zero());
    CHECK(a_mul(sn, gen(sn, 1), gen(sn, 3)).is_zero());
}

TEST_CASE("idempotents e_g") {
    Field q = Field::rationals();
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 4; ++t) {
        FactorSet s = general(c4, q, fixtures::random_general_pairs(c4, rng, 2));
        Spectrum sp(s);
        CHECK(e_idempotent(sp, 0) == a_unit(sp));
        for (int g = 0; g < 4; ++g) {
            AlgebraElement e = e_idempotent(sp, g);
            CHECK(a_mul(sp, e, e) == e);
            // Closed form chi({1,g}) ({1,g}, 1).
            Mask m = Mask(1) | (Mask(1) << g);
            AlgebraElement closed;
            if (sp.chi(m)) closed = AlgebraElement::term(FieldScalar::one(q), m, 0);
            CHECK(e == closed);
        }
        // prod_{h in xi} e_h = chi(xi) (xi, 1) on every subset.
        for (Mask xi = 1; xi <= c4.full_mask(); xi += 2) {
            AlgebraElement prod = a_unit(sp);
            for (int h : mask_elements(xi)) prod = a_mul(sp, prod, e_idempotent(sp, h));
            AlgebraElement expected;
            if (sp.chi(xi)) expected = AlgebraElement::term(FieldScalar::one(q), xi, 0);
            CHECK(prod == expected);
            CHECK(sp.contains(xi) == !prod.is_zero());
        }
    }
}

TEST_CASE("partition of unity") {
    Field q = Field::rationals();
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    Spectrum sp(FactorSet::ones(c2, q));
    AlgebraElement u1 = upsilon(sp, 0b01);
    AlgebraElement u2 = upsilon(sp, 0b11);
    CHECK(u1 == a_unit(sp) - AlgebraElement::term(FieldScalar::one(q), 0b11, 0));
    CHECK(u2 == AlgebraElement::term(FieldScalar::one(q), 0b11, 0));
    CHECK(u1 + u2 == a_unit(sp));
    CHECK(verify_partition_of_unity(sp));

    FiniteGroup c4 = FiniteGroup::cyclic(4);
    Spectrum sn(FactorSet::subgroup_indicator(c4, q, 0b0101));
    CHECK(verify_partition_of_unity(sn));
    CHECK(upsilon(sn, Mask(1)) + upsilon(sn, 0b0101) == a_unit(sn));
    CHECK_THROWS_AS(upsilon(sn, 0b0011), NotInOmega);

    Spectrum tiny(FactorSet::subgroup_indicator(c4, q, Mask(1)));
    CHECK(upsilon(tiny, Mask(1)) == a_unit(tiny));
}

TEST_CASE("defining relations hold for validated factor sets") {
    Field q = Field::rationals();
    std::mt19937_64 rng(3);
    for (const FiniteGroup& g :
         {FiniteGroup::cyclic(4), FiniteGroup::klein(), FiniteGroup::symmetric(3),
          FiniteGroup::cyclic(6)}) {
        CHECK(check_defining_relations(Spectrum(FactorSet::ones(g, q))).ok());
        for (int t = 0; t < 5; ++t) {
            FactorSet s = general(g, q, fixtures::random_general_pairs(g, rng, 2));
            CHECK(check_defining_relations(Spectrum(s)).ok());
        }
    }
}

TEST_CASE("triple products vanish exactly off the cocycle locus") {
    // For a total normalized member, gen(x)gen(y)gen(z) = 0 iff the
    // four-factor coboundary is not 1.
    Field f7 = Field::gf(7);
    FiniteGroup c9 = fixtures::c3_times_c3();
    FactorSet s = fixtures::normalized_bilinear_c3c3(c9, f7);
    Spectrum sp(s);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y)
            for (int z = 0; z < 9; ++z) {
                AlgebraElement p = a_mul(sp, a_mul(sp, gen(sp, x), gen(sp, y)), gen(sp, z));
                CHECK(p.is_zero() == !coboundary_defect(s, x, y, z).is_one());
            }
}

TEST_CASE("associativity of the algebra product") {
    Field f7 = Field::gf(7);
    std::mt19937_64 rng(4);
    // Exhaustive on orders <= 4.
    for (const FiniteGroup& g : {FiniteGroup::cyclic(4), FiniteGroup::klein()}) {
        FactorSet s = general(g, f7, fixtures::random_general_pairs(g, rng, 2));
        Spectrum sp(s);
        auto keys = detail::basis_keys(sp);
        FieldScalar one = FieldScalar::one(f7);
        for (const auto& ka : keys)
            for (const auto& kb : keys)
                for (const auto& kc : keys) {
                    AlgebraElement a = AlgebraElement::term(one, ka.u, ka.g);
                    AlgebraElement b = AlgebraElement::term(one, kb.u, kb.g);
                    AlgebraElement c = AlgebraElement::term(one, kc.u, kc.g);
                    CHECK(a_mul(sp, a_mul(sp, a, b), c) == a_mul(sp, a, a_mul(sp, b, c)));
                }
    }
    // Sampled on orders 6 and 8.
    for (const FiniteGroup& g : {FiniteGroup::symmetric(3), FiniteGroup::dihedral(4)}) {
        Spectrum sp(FactorSet::ones(g, f7));
        auto keys = detail::basis_keys(sp);
        FieldScalar one = FieldScalar::one(f7);
        for (int t = 0; t < 2000; ++t) {
            const auto& ka = keys[rng() % keys.size()];
            const auto& kb = keys[rng() % keys.size()];
            const auto& kc = keys[rng() % keys.size()];
            AlgebraElement a = AlgebraElement::term(one, ka.u, ka.g);
            AlgebraElement b = AlgebraElement::term(one, kb.u, kb.g);
            AlgebraElement c = AlgebraElement::term(one, kc.u, kc.g);
            CHECK(a_mul(sp, a_mul(sp, a, b), c) == a_mul(sp, a, a_mul(sp, b, c)));
        }
    }
}

TEST_CASE("the diagonal span is a commutative subalgebra") {
    Field q = Field::rationals();
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    std::mt19937_64 rng(5);
    FactorSet s = general(c4, q, fixtures::random_general_pairs(c4, rng, 2));
    Spectrum sp(s);
    FieldScalar one = FieldScalar::one(q);
    std::vector<AlgebraElement> basis;
    for (Mask u : sp.members()) basis.push_back(AlgebraElement::term(one, u, 0));
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            AlgebraElement ab = a_mul(sp, a, b);
            CHECK(ab == a_mul(sp, b, a));
            for (const auto& [k, c] : ab.terms()) CHECK(k.g == 0);
        }
    }
}

TEST_CASE("dimension formula") {
    Field q = Field::rationals();
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    CHECK(dimension(Spectrum(FactorSet::ones(c2, q))) == 3);

    FiniteGroup c4 = FiniteGroup::cyclic(4);
    CHECK(dimension(Spectrum(FactorSet::subgroup_indicator(c4, q, Mask(1)))) == 1);

    for (int n : {2, 3, 4}) {
        FiniteGroup g = FiniteGroup::cyclic(n);
        long long expected = 0;
        std::vector<long long> binom(n, 0);
        binom[0] = 1;
        for (int row = 1; row <= n - 1; ++row)
            for (int col = row; col >= 1; --col) binom[col] += binom[col - 1];
        for (int k = 1; k <= n; ++k) expected += binom[k - 1] * k;
        CHECK(dimension(Spectrum(FactorSet::ones(g, q))) == expected);
    }
}

TEST_CASE("maximal commutativity of the diagonal span") {
    // The commutant of the diagonal span has dimension dim - rank(M),
    // where M stacks the linear maps x -> x b - b x over the diagonal
    // basis. The span is maximal commutative iff that equals |Omega|.
    auto commutant_dim = [](const Spectrum& sp) {
        auto keys = detail::basis_keys(sp);
        int dim = static_cast<int>(keys.size());
        FieldScalar one = FieldScalar::one(sp.field());
        Subspace constraints(dim, sp.field());
        int rank = 0;
        for (Mask u : sp.members()) {
            AlgebraElement b = AlgebraElement::term(one, u, 0);
            // Rows of the map x -> x b - b x, one constraint per output
            // coordinate, assembled column by column over the basis.
            std::vector<Vec> rows(dim, Vec(dim, FieldScalar::zero(sp.field())));
            for (int j = 0; j < dim; ++j) {
                AlgebraElement e = AlgebraElement::term(one, keys[j].u, keys[j].g);
                AlgebraElement img = a_mul(sp, e, b) - a_mul(sp, b, e);
                Vec col = detail::coords(sp, keys, img);
                for (int i = 0; i < dim; ++i) rows[i][j] = col[i];
            }
            for (auto& row : rows) rank += constraints.insert(std::move(row));
        }
        return dim - rank;
    };

    Field q = Field::rationals();
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    Spectrum sp2(FactorSet::ones(c2, q));
    // gen(a) commutes with the whole diagonal span, so the span is not
    // maximal commutative here (matching the non-free action).
    CHECK(commutant_dim(sp2) == 3);
    CHECK(static_cast<long long>(sp2.members().size()) < commutant_dim(sp2));

    FiniteGroup c4 = FiniteGroup::cyclic(4);
    Spectrum tiny(FactorSet::subgroup_indicator(c4, q, Mask(1)));
    CHECK(commutant_dim(tiny) == 1);
    CHECK(static_cast<long long>(tiny.members().size()) == commutant_dim(tiny));

    FiniteGroup klein = FiniteGroup::klein();
    Spectrum spk(FactorSet::ones(klein, q));
    CHECK(commutant_dim(spk) >= static_cast<long long>(spk.members().size()));
}

TEST_CASE("ideal meets the diagonal subalgebra") {
    Field q = Field::rationals();
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    Spectrum sp(FactorSet::ones(c2, q));

    CHECK_THROWS_AS(ideal_meets_B(sp, AlgebraElement()), ZeroElement);
    // Upsilon_A lies in the diagonal span already.
    CHECK(ideal_meets_B(sp, upsilon(sp, 0b01)));
    CHECK(ideal_meets_B(sp, upsilon(sp, 0b11)));
    // gen(a) generates an ideal containing gen(a)^2 = ({1,a},1).
    CHECK(ideal_meets_B(sp, gen(sp, 1)));

    std::mt19937_64 rng(6);
    for (int t = 0; t < 10; ++t) CHECK(ideal_meets_B(sp, random_element(sp, rng)));
}

TEST_CASE("ideals meet the diagonal on a non-collapsed free instance") {
    // On the symmetric group on three letters, killing the transposition
    // diagonals and the three-cycle triples leaves the two-element sets
    // {1, r} alive: a five-dimensional algebra whose translation action
    // has no fixed points at all.
    Field q = Field::rationals();
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    std::set<GPair> t;
    int r = -1;
    for (int g = 1; g < 6; ++g) {
        if (s3.mul(g, g) == 0) t.insert({g, g}); // transpositions
        else r = g;
    }
    t.insert({r, r});
    t.insert({s3.inv(r), s3.inv(r)});
    FactorSet sigma = general(s3, q, t);
    Spectrum sp(sigma);
    CHECK(dimension(sp) == 5); // {1} and the two sets {1, r}, {1, r^2}
    for (int g = 1; g < 6; ++g) CHECK(sp.fixed_points(g).empty());
    CHECK(freeness_report(sp).topologically_free);

    std::mt19937_64 rng(7);
    for (int k = 0; k < 25; ++k) CHECK(ideal_meets_B(sp, random_element(sp, rng)));
    CHECK(ideal_meets_B(sp, gen(sp, r)));
    CHECK(ideal_meets_B(sp, gen(sp, r) - gen(sp, s3.inv(r))));
}
