// Cohomology of the amalgamated product of the order-4 and order-6
// subgroups over the central order-2 one, computed from the mapping-cone
// complex, plus the Mayer-Vietoris consistency report.

#include <catch_amalgamated.hpp>

#include <braidcoh/abelian.hpp>
#include <braidcoh/amalgam.hpp>

using namespace braidcoh;
using namespace braidcoh::exactalg;
using namespace braidcoh::amalgam;

TEST_CASE("trivial coefficients give the classical answer", "[amalgam]") {
    const symmod::Weight w(0);
    CHECK(cohomology(0, w) == AbelianGroup(1, {}));
    CHECK(cohomology(1, w).is_trivial());
    CHECK(cohomology(2, w) == AbelianGroup(0, {12}));
    CHECK(cohomology(3, w).is_trivial());
    CHECK(cohomology(4, w) == AbelianGroup(0, {12}));
}

TEST_CASE("no invariants in positive degree", "[amalgam]") {
    for (long long n = 2; n <= 16; n += 2) {
        INFO("degree " << n);
        CHECK(cohomology(0, symmod::Weight(n)).is_trivial());
    }
}

TEST_CASE("pinned first cohomology groups", "[amalgam]") {
    CHECK(cohomology(1, symmod::Weight(4)) == AbelianGroup(1, {2}));
    CHECK(cohomology(1, symmod::Weight(8)) == AbelianGroup(1, {12}));
    CHECK(cohomology(1, symmod::Weight(12)) == AbelianGroup(1, {2, 60}));
}

TEST_CASE("cone differentials compose to zero", "[amalgam]") {
    for (long long n = 0; n <= 12; n += 2)
        for (long long i = 0; i <= 3; ++i) {
            const symmod::Weight w(n);
            const IntMatrix a = cone_differential(i, w);
            const IntMatrix b = cone_differential(i + 1, w);
            INFO("degree " << n << ", i " << i);
            CHECK((b * a).is_zero());
        }
}

TEST_CASE("mayer-vietoris consistency in degree two", "[amalgam]") {
    for (long long p : {2, 3})
        for (long long n = 0; n <= 12; n += 2) {
            INFO("p " << p << ", degree " << n);
            CHECK(mayer_vietoris_consistency(2, symmod::Weight(n), p).all());
        }
}
