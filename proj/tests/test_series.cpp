// Rational generating functions: exact expansion, the named catalog, and
// the identities connecting catalog entries to each other.

#include <catch_amalgamated.hpp>

#include <braidcoh/series.hpp>

using namespace braidcoh::exactalg;
using namespace braidcoh::series;

TEST_CASE("geometric series expansion", "[series]") {
    // 1 / (1 - t^4) = 1 + t^4 + t^8 + ...
    const RationalSeries s(term(0), one_minus(4));
    const auto c = s.expand(12);
    REQUIRE(c.size() == 13);
    for (long long d = 0; d <= 12; ++d)
        CHECK(c[static_cast<std::size_t>(d)] == (d % 4 == 0 ? 1 : 0));
    CHECK(s.coefficient(100) == 1);
    CHECK(s.coefficient(101) == 0);
}

TEST_CASE("expansion requires a unit constant term", "[series]") {
    CHECK_THROWS_AS(RationalSeries(term(0), {2, 1}).expand(4), std::invalid_argument);
    CHECK_THROWS_AS(RationalSeries(term(0), {}), std::invalid_argument);
    CHECK_THROWS_AS(RationalSeries(term(0), {0, 1}), std::invalid_argument);
}

TEST_CASE("series arithmetic is a ring homomorphism on coefficients", "[series]") {
    const RationalSeries a(term(0), one_minus(2));
    const RationalSeries b({0, 1}, one_minus(3));
    const auto ca = a.expand(20);
    const auto cb = b.expand(20);

    const auto sum = (a + b).expand(20);
    const auto diff = (a - b).expand(20);
    for (std::size_t d = 0; d <= 20; ++d) {
        CHECK(sum[d] == ca[d] + cb[d]);
        CHECK(diff[d] == ca[d] - cb[d]);
    }

    const auto prod = (a * b).expand(20);
    for (std::size_t d = 0; d <= 20; ++d) {
        Int conv = 0;
        for (std::size_t j = 0; j <= d; ++j) conv += ca[j] * cb[d - j];
        CHECK(prod[d] == conv);
    }
}

TEST_CASE("fixed-subgroup dimension counts", "[series]") {
    // (1 + t^4) / (1 - t^4)^2 counts invariants of the order-2 center:
    // coefficient 2k + 1 at degree 4k.
    const auto c = catalog_entry("z2-even").series.expand(40);
    for (long long k = 0; k <= 10; ++k) {
        CHECK(c[static_cast<std::size_t>(4 * k)] == 2 * k + 1);
        if (k > 0) CHECK(c[static_cast<std::size_t>(4 * k - 2)] == 0);
    }
}

TEST_CASE("free rank generating function of the braid group", "[series]") {
    const auto c = catalog_entry("b3-free").series.expand(28);
    const std::vector<Int> expected{1, 1, 1, 1, 3, 1, 3};
    for (std::size_t k = 0; k < expected.size(); ++k) {
        INFO("degree " << 4 * (k + 1));
        CHECK(c[4 * (k + 1)] == expected[k]);
    }
    CHECK(c[0] == 0);
    CHECK(c[2] == 0);
}

TEST_CASE("order-4 torsion appears every eighth degree", "[series]") {
    const auto c = catalog_entry("z4-4tors").series.expand(32);
    for (long long n = 0; n <= 32; n += 2)
        CHECK(c[static_cast<std::size_t>(n)] == (n % 8 == 0 ? 1 : 0));
}

TEST_CASE("torsion counts for the amalgam in degree one", "[series]") {
    const auto c = catalog_entry("sl2z-h1-tors-mod2").series.expand(24);
    // At degree 12 the model predicts classes of order 2 and 4: two summands.
    CHECK(c[12] == 2);
    CHECK(c[6] == 1);
    CHECK(c[2] == 0);
}

TEST_CASE("every catalog entry expands", "[series]") {
    for (const auto& [name, entry] : catalog()) {
        INFO("series " << name);
        CHECK_NOTHROW(entry.series.expand(40));
        CHECK_FALSE(entry.description.empty());
    }
    CHECK_THROWS_AS(catalog_entry("bogus"), std::invalid_argument);
}

TEST_CASE("euler characteristic identity across the decomposition", "[series]") {
    CHECK(mv_euler_identity(120) == -1);
}

TEST_CASE("comparison report finds the first mismatch", "[series]") {
    const auto good = catalog_entry("z2-even").series.expand(20);
    CHECK(compare("z2-even", good).match);

    auto bad = good;
    bad[8] += 1;
    const auto rep = compare("z2-even", bad);
    CHECK_FALSE(rep.match);
    CHECK(rep.first_mismatch_degree == 8);
    CHECK(rep.computed_at_mismatch == rep.expected_at_mismatch + 1);
}

TEST_CASE("even-order counts of the higher amalgam cohomology combine", "[series]") {
    // The degree-two and degree-three even-order summand counts add up to
    // the clean closed form (1+t^4)/((1-t^2)(1-t^8)); subtracting the
    // invariant-monomial count of the degree-(6,4) pair gives the mod-2
    // dimension of the braid group's second cohomology degreewise.
    const auto c2 = catalog_entry("sl2z-h2-mod2").series.expand(120);
    const auto c3 = catalog_entry("sl2z-h3-mod2").series.expand(120);
    const RationalSeries combined(one_plus(4),
                                  poly_mul(one_minus(2), one_minus(8)));
    const auto cc = combined.expand(120);
    for (std::size_t n = 0; n <= 120; ++n) {
        INFO("degree " << n);
        CHECK(c2[n] + c3[n] == cc[n]);
    }
}

TEST_CASE("restriction sum identity between the subgroup series", "[series]") {
    // Combining the even- and odd-degree counts for the order-6 subgroup
    // reproduces its mod-2 invariant dimension series.
    const auto z6e = catalog_entry("z6-even").series.expand(60);
    const auto z6o2 = catalog_entry("z6-odd-mod2").series.expand(60);
    const auto inv2 = catalog_entry("z6-inv-mod2").series.expand(60);
    for (std::size_t n = 0; n <= 60; n += 2) {
        INFO("degree " << n);
        CHECK(inv2[n] == z6e[n] + z6o2[n]);
    }
}

TEST_CASE("weighted combination of the order-6 counts", "[series]") {
    // 3 * [(1+t^8)/((1-t^4)(1-t^12)) - (1+t^8)/(1-t^12)]
    //   + 2 t^8/(1-t^12) + 1/(1-t^12)  ==  (1+t^4)/(1-t^4)^2.
    const RationalSeries a(one_plus(8), poly_mul(one_minus(4), one_minus(12)));
    const RationalSeries b(one_plus(8), one_minus(12));
    const RationalSeries c(term(8, 2), one_minus(12));
    const RationalSeries d(term(0), one_minus(12));
    const RationalSeries three(Poly{3}, Poly{1});
    const RationalSeries lhs = three * (a - b) + c + d;
    const RationalSeries rhs(one_plus(4), poly_mul(one_minus(4), one_minus(4)));

    const auto lc = lhs.expand(60);
    const auto rc = rhs.expand(60);
    for (std::size_t n = 0; n <= 60; ++n) {
        INFO("degree " << n);
        CHECK(lc[n] == rc[n]);
    }
}
