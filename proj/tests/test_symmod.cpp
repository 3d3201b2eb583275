// The coefficient modules: words in the two braid generators, their 2x2
// matrices, and symmetric-power actions on homogeneous polynomials in two
// variables.

#include <catch_amalgamated.hpp>

#include <braidcoh/symmod.hpp>

using namespace braidcoh::exactalg;
using namespace braidcoh::symmod;

namespace {

IntMatrix mat2(long long a, long long b, long long c, long long d) {
    IntMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

} // namespace

TEST_CASE("weights must have even degree", "[symmod]") {
    CHECK_THROWS_AS(Weight(3), std::invalid_argument);
    CHECK_THROWS_AS(Weight(-2), std::invalid_argument);
    CHECK(Weight(8).poly_degree() == 4);
    CHECK(Weight(8).rank() == 5);
    CHECK(Weight(0).rank() == 1);
}

TEST_CASE("generator matrices in the defining representation", "[symmod]") {
    const Weight w(2);
    CHECK(action_matrix(GroupWord::s1(), w) == mat2(1, 0, -1, 1));
    CHECK(action_matrix(GroupWord::s2(), w) == mat2(1, 1, 0, 1));
    CHECK(action_matrix(GroupWord::w4(), w) == mat2(0, 1, -1, 0));
    CHECK(action_matrix(GroupWord::w6(), w) == mat2(0, 1, -1, 1));
}

TEST_CASE("sign of the central involution", "[symmod]") {
    // w2 acts by (-1)^d on the degree-d symmetric power.
    CHECK(action_matrix(GroupWord::w2(), Weight(2)) == -IntMatrix::identity(2));
    CHECK(action_matrix(GroupWord::w2(), Weight(4)) == IntMatrix::identity(3));
    CHECK(action_matrix(GroupWord::central(), Weight(6)) ==
          IntMatrix::identity(4));
}

TEST_CASE("group relations hold across degrees", "[symmod]") {
    for (long long n : {0, 2, 4, 6, 8, 10, 16}) {
        INFO("degree " << n);
        CHECK(verify_relations(Weight(n)).all());
    }
}

TEST_CASE("action matrices compose contravariantly", "[symmod]") {
    // With a right action, the matrix of a product uv is the product of the
    // matrices in reverse order.
    const Weight w(6);
    const GroupWord u = GroupWord::s1() * GroupWord::s2_inv() * GroupWord::s1();
    const GroupWord v = GroupWord::s2() * GroupWord::s1();
    CHECK(action_matrix(u * v, w) == action_matrix(v, w) * action_matrix(u, w));
}

TEST_CASE("left action matrices compose covariantly", "[symmod]") {
    const Weight w(4);
    const GroupWord u = GroupWord::s2() * GroupWord::s1_inv();
    const GroupWord v = GroupWord::s1() * GroupWord::s1() * GroupWord::s2();
    CHECK(left_action_matrix(u * v, w) ==
          left_action_matrix(u, w) * left_action_matrix(v, w));
    CHECK(left_action_matrix(u, w) == action_matrix(u.inverse(), w));
}

TEST_CASE("word inverse and powers", "[symmod]") {
    const GroupWord u = GroupWord::s1() * GroupWord::s2_inv();
    const Weight w(4);
    const IntMatrix id = IntMatrix::identity(w.rank());
    CHECK(action_matrix(u * u.inverse(), w) == id);
    CHECK(action_matrix(u.pow(0), w) == id);
    CHECK(action_matrix(u.pow(3), w) == action_matrix(u * u * u, w));
    CHECK(action_matrix(u.pow(-2), w) ==
          action_matrix(u.inverse() * u.inverse(), w));
}
