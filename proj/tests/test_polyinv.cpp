// Invariant rings of the finite subgroups acting on polynomials in two
// variables, their finite presentations, and the Dickson-style generators
// of the full mod-p invariant rings.

#include <catch_amalgamated.hpp>

#include <braidcoh/polyinv.hpp>

using namespace braidcoh;
using namespace braidcoh::exactalg;
using namespace braidcoh::polyinv;

TEST_CASE("polynomial arithmetic basics", "[polyinv]") {
    const BivariatePoly x = BivariatePoly::x();
    const BivariatePoly y = BivariatePoly::y();

    CHECK((x + y) * (x - y) == x.pow(2) - y.pow(2));
    CHECK((x * y).pow(2) == x.pow(2) * y.pow(2));
    CHECK((x - x).is_zero());
    CHECK(gens::a2() * gens::b2() == gens::c2() * gens::c2());
    CHECK(x.pow(3).is_homogeneous_of_poly_degree(3));
    CHECK_FALSE((x.pow(2) + y).is_homogeneous_of_poly_degree(2));

    // Reduction mod 2 kills even coefficients.
    CHECK(((x + y).pow(2) - x.pow(2) - y.pow(2)).reduced_mod(2).is_zero());
}

TEST_CASE("substitution matches the symmetric power matrices", "[polyinv]") {
    // coordinates(P ∘ g) == action_matrix(g) · coordinates(P), for every
    // basis monomial of M_6 and both braid generators.
    const symmod::Weight w(6);
    for (const auto word : {symmod::GroupWord::s1(), symmod::GroupWord::s2()}) {
        const Mat2 g = symmod::mat2_action(word);
        const IntMatrix t = symmod::action_matrix(word, w);
        for (std::size_t j = 0; j < w.rank(); ++j) {
            std::vector<Int> e(w.rank(), 0);
            e[j] = 1;
            const BivariatePoly p = BivariatePoly::from_coordinates(e, w);
            const auto lhs = p.substituted(g).coordinates(w);
            for (std::size_t i = 0; i < w.rank(); ++i) {
                INFO("column " << j << " row " << i);
                CHECK(lhs[i] == t(i, j));
            }
        }
    }
}

TEST_CASE("coordinates reject inhomogeneous input", "[polyinv]") {
    const symmod::Weight w(4);
    CHECK_THROWS_AS((BivariatePoly::x() + BivariatePoly::constant(1)).coordinates(w),
                    std::invalid_argument);
    CHECK_THROWS_AS(BivariatePoly::x().coordinates(w), std::invalid_argument);
}

TEST_CASE("all ring presentations verify", "[polyinv]") {
    for (const auto& name : presentation_names()) {
        const auto rep = verify_ring_presentation(name, 24);
        INFO("presentation " << name);
        CHECK(rep.generators_invariant);
        CHECK(rep.relation_holds);
        CHECK(rep.dimensions_match);
        CHECK(rep.mismatch_degrees.empty());
    }
    CHECK_THROWS_AS(presentation("bogus"), std::invalid_argument);
}

TEST_CASE("normal form counts in small degree", "[polyinv]") {
    // Three degree-4 generators with one quadratic relation: degree 8 has
    // the five monomials a^2, ab, b^2, ac, bc.
    CHECK(presentation("z2-int").normal_form_count(8) == 5);
    // Free on degrees 2 and 4: degree 8 gives s1^4, s1^2 s2, s2^2.
    CHECK(presentation("z4-mod2").normal_form_count(8) == 3);
    CHECK(presentation("z6-int").normal_form_count(12) == 3);
    CHECK(presentation("z6-int").normal_form_count(2) == 0);
}

TEST_CASE("invariant dimensions", "[polyinv]") {
    CHECK(invariant_dimension(Group::z4, symmod::Weight(8)) == 3);
    CHECK(invariant_dimension(Group::z4, symmod::Weight(2)) == 0);
    CHECK(invariant_dimension_mod_p(Group::z4, symmod::Weight(8), 2) == 3);
    CHECK(invariant_dimension(Group::sl2z, symmod::Weight(2)) == 0);

    // The sign action has no integral invariants in odd polynomial degree,
    // but everything survives mod 2.
    CHECK(invariant_dimension(Group::z2, symmod::Weight(2)) == 0);
    CHECK(invariant_structure_mod_prime_power(Group::z2, symmod::Weight(2), 2, 1) ==
          AbelianGroup(0, {2, 2}));
}

TEST_CASE("invariant bases really are invariant", "[polyinv]") {
    const symmod::Weight w(12);
    const auto basis = invariant_basis(Group::z6, w);
    const auto gens6 = group_generators(Group::z6);
    for (const auto& p : basis)
        for (const auto& g : gens6) CHECK(p.substituted(g) == p);
    CHECK(basis.size() ==
          static_cast<std::size_t>(invariant_dimension(Group::z6, w)));
}

TEST_CASE("dickson generators in characteristic two", "[polyinv]") {
    const auto dk = dickson_generators(2);
    const BivariatePoly x = BivariatePoly::x();
    const BivariatePoly y = BivariatePoly::y();
    CHECK(dk.p_poly == x.pow(2) * y - x * y.pow(2));
    CHECK(dk.q_poly == x.pow(2) + x * y + y.pow(2));
    CHECK(dk.deg_p == 6);
    CHECK(dk.deg_q == 4);
    CHECK_THROWS_AS(dickson_generators(4), std::invalid_argument);
}

TEST_CASE("dickson factorization across field extensions", "[polyinv]") {
    for (long long p : {2, 3, 5}) {
        INFO("p " << p);
        CHECK(dickson_factorization_holds(p));
    }
}

TEST_CASE("dickson invariants span the mod-p invariant ring", "[polyinv]") {
    for (long long p : {2, 3})
        for (long long n = 2; n <= 24; n += 2) {
            const auto rep = verify_dickson_mod_p(p, symmod::Weight(n));
            INFO("p " << p << ", degree " << n);
            CHECK(rep.monomials_invariant);
            CHECK(rep.monomials_independent);
            CHECK(rep.predicted_count == rep.computed_dimension);
        }
}

TEST_CASE("invariants mod prime powers match the torsion model", "[polyinv]") {
    for (long long r = 1; r <= 3; ++r)
        for (long long n = 0; n <= 24; n += 2) {
            INFO("r " << r << ", degree " << n);
            CHECK(verify_steinberg_mod_pr(2, r, symmod::Weight(n)));
        }
}
