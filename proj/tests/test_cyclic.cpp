// Cohomology of the finite cyclic subgroups via the 2-periodic resolution,
// checked against the closed-form and orbit-counting models.

#include <catch_amalgamated.hpp>

#include <braidcoh/abelian.hpp>
#include <braidcoh/cyclic.hpp>
#include <braidcoh/series.hpp>

using namespace braidcoh;
using namespace braidcoh::exactalg;
using namespace braidcoh::cyclic;

TEST_CASE("only orders 2, 4 and 6 are accepted", "[cyclic]") {
    CHECK_THROWS_AS(cohomology(3, 1, symmod::Weight(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(cohomology(5, 0, symmod::Weight(2)),
                    std::invalid_argument);
}

TEST_CASE("pinned values for the order-4 subgroup", "[cyclic]") {
    CHECK(cohomology(4, 2, symmod::Weight(4)) == AbelianGroup(0, {2}));
    CHECK(cohomology(4, 2, symmod::Weight(8)) == AbelianGroup(0, {2, 2, 4}));
    CHECK(cohomology(4, 0, symmod::Weight(8)).free_rank() == 3);
    CHECK(cohomology(4, 0, symmod::Weight(8)).invariant_factors().empty());
}

TEST_CASE("pinned values for the order-2 subgroup", "[cyclic]") {
    CHECK(cohomology(2, 2, symmod::Weight(8)) ==
          AbelianGroup(0, {2, 2, 2, 2, 2}));
    CHECK(cohomology(2, 0, symmod::Weight(0)) == AbelianGroup(1, {}));
    CHECK(cohomology(2, 1, symmod::Weight(0)).is_trivial());
}

TEST_CASE("order-2 cohomology matches its closed form", "[cyclic]") {
    for (long long n = 0; n <= 16; n += 2)
        for (long long i = 0; i <= 5; ++i) {
            INFO("degree " << n << ", cohomological degree " << i);
            CHECK(cohomology(2, i, symmod::Weight(n)) ==
                  z2_closed_form(i, symmod::Weight(n)));
        }
}

TEST_CASE("order-4 cohomology matches the orbit model", "[cyclic]") {
    for (long long n = 0; n <= 16; n += 2)
        for (long long i = 0; i <= 4; ++i) {
            INFO("degree " << n << ", cohomological degree " << i);
            CHECK(cohomology(4, i, symmod::Weight(n)) ==
                  z4_orbit_model(i, symmod::Weight(n)));
        }
}

TEST_CASE("order-6 cohomology matches the generating functions", "[cyclic]") {
    const long long max_n = 12;
    const auto even = series::catalog_entry("z6-even").series.expand(max_n);
    const auto even3 = series::catalog_entry("z6-even-mod3").series.expand(max_n);
    const auto odd2 = series::catalog_entry("z6-odd-mod2").series.expand(max_n);
    const auto odd3 = series::catalog_entry("z6-odd-mod3").series.expand(max_n);

    for (long long n = 0; n <= max_n; n += 2) {
        const symmod::Weight w(n);
        const auto idx = static_cast<std::size_t>(n);
        const long long e = static_cast<long long>(even[idx]);
        const long long e3 = static_cast<long long>(even3[idx]);
        const long long o2 = static_cast<long long>(odd2[idx]);
        const long long o3 = static_cast<long long>(odd3[idx]);

        INFO("degree " << n);
        CHECK(cohomology(6, 0, w) == AbelianGroup(e, {}));

        std::vector<Int> even_orders(static_cast<std::size_t>(e), 2);
        even_orders.insert(even_orders.end(), static_cast<std::size_t>(e3), 3);
        CHECK(cohomology(6, 2, w) == AbelianGroup(0, even_orders));

        std::vector<Int> odd_orders(static_cast<std::size_t>(o2), 2);
        odd_orders.insert(odd_orders.end(), static_cast<std::size_t>(o3), 3);
        CHECK(cohomology(6, 1, w) == AbelianGroup(0, odd_orders));
    }
}

TEST_CASE("positive-degree cohomology is 2-periodic", "[cyclic]") {
    for (long long m : {2, 4, 6})
        for (long long n = 0; n <= 12; n += 2)
            for (long long i = 1; i <= 2; ++i) {
                INFO("order " << m << ", degree " << n << ", i " << i);
                CHECK(cohomology(m, i, symmod::Weight(n)) ==
                      cohomology(m, i + 2, symmod::Weight(n)));
            }
}

TEST_CASE("mod-p dimensions obey universal coefficients", "[cyclic]") {
    // dim H^i(-; M/p) = dim(H^i ⊗ F_p) + #{p-torsion of H^{i+1}}.
    for (long long p : {2, 3})
        for (long long n = 0; n <= 12; n += 2)
            for (long long i = 1; i <= 2; ++i) {
                const symmod::Weight w(n);
                const AbelianGroup hi = cohomology(6, i, w);
                const AbelianGroup hnext = cohomology(6, i + 1, w);
                const long long expected =
                    hi.tensor_fp_dimension(p) +
                    (hnext.tensor_fp_dimension(p) - hnext.free_rank());
                INFO("p " << p << ", degree " << n << ", i " << i);
                CHECK(cohomology_dimension_mod_p(6, i, w, p) == expected);
            }
}
