// Exact integer linear algebra: Smith normal form, finitely generated
// abelian groups, and the small mod-p kernel helpers everything else
// builds on.

#include <catch_amalgamated.hpp>

#include <braidcoh/abelian.hpp>
#include <braidcoh/field.hpp>
#include <braidcoh/intmatrix.hpp>
#include <braidcoh/smith.hpp>

using namespace braidcoh::exactalg;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("smith normal form of a textbook 2x2 matrix", "[smith]") {
    const IntMatrix a = from_rows({{2, 4}, {6, 8}});
    const auto s = smith_normal_form(a);
    REQUIRE(s.diagonal.size() == 2);
    CHECK(s.diagonal[0] == 2);
    CHECK(s.diagonal[1] == 4);
    CHECK(s.rank == 2);
}

TEST_CASE("smith normal form satisfies its transform contract", "[smith]") {
    const IntMatrix a = from_rows({{4, 6, 10}, {2, 0, 8}, {6, 6, 18}});
    const auto s = smith_normal_form(a);

    // U * A * V must equal the diagonal form D.
    CHECK(s.u * a * s.v == s.d);

    // The transforms are unimodular and the tracked inverse really inverts.
    const Int du = bareiss_determinant(s.u);
    const Int dv = bareiss_determinant(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(s.v * s.v_inv == IntMatrix::identity(a.cols()));

    // Divisor chain: each diagonal entry divides the next.
    for (std::size_t k = 0; k + 1 < s.rank; ++k) {
        CHECK(s.diagonal[k] > 0);
        CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
    }
}

TEST_CASE("smith normal form edge cases", "[smith]") {
    const auto z = smith_normal_form(IntMatrix(2, 3));
    CHECK(z.rank == 0);

    const auto id = smith_normal_form(IntMatrix::identity(4));
    REQUIRE(id.rank == 4);
    for (std::size_t k = 0; k < 4; ++k) CHECK(id.diagonal[k] == 1);

    // Rank-deficient: second row is a multiple of the first.
    const auto r = smith_normal_form(from_rows({{3, 6}, {6, 12}}));
    CHECK(r.rank == 1);
    CHECK(r.diagonal[0] == 3);

    CHECK(integer_rank(from_rows({{1, 2}, {2, 4}, {3, 6}})) == 1);
}

TEST_CASE("kernel lattice basis spans the integer kernel", "[smith]") {
    const IntMatrix a = from_rows({{1, 2, 3}});
    const auto basis = kernel_lattice_basis(a);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        Int dot = 0;
        for (std::size_t j = 0; j < 3; ++j) dot += a(0, j) * v[j];
        CHECK(dot == 0);
    }
}

TEST_CASE("abelian group canonicalization", "[abelian]") {
    // Z/4 + Z/6 and Z/2 + Z/12 are the same group.
    CHECK(AbelianGroup(0, {4, 6}) == AbelianGroup(0, {2, 12}));
    CHECK(AbelianGroup(0, {6, 4}).invariant_factors() ==
          std::vector<Int>{2, 12});

    // Zeros become free summands, ones vanish, signs are ignored.
    const AbelianGroup g(1, {0, 1, -3});
    CHECK(g.free_rank() == 2);
    CHECK(g.invariant_factors() == std::vector<Int>{3});

    CHECK(AbelianGroup().is_trivial());
    CHECK_FALSE(AbelianGroup(0, {2}).is_trivial());
    CHECK_THROWS_AS(AbelianGroup(-1, {}), std::invalid_argument);
}

TEST_CASE("primary decomposition splits invariant factors", "[abelian]") {
    const AbelianGroup g(1, {180});
    CHECK(g.primary_decomposition() == std::vector<Int>{4, 5, 9});
    CHECK(g.torsion_order() == 180);

    const AbelianGroup h(0, {2, 12});
    CHECK(h.primary_decomposition() == std::vector<Int>{2, 3, 4});
    CHECK(h.torsion_p(2) == std::vector<Int>{2, 4});
    CHECK(h.torsion_p(3) == std::vector<Int>{3});
    CHECK(h.torsion_p(5).empty());
}

TEST_CASE("tensor dimensions over prime fields", "[abelian]") {
    // Z^2 + Z/12 + Z/5: tensoring with F_p keeps free summands and the
    // cyclic factors p divides.
    const AbelianGroup g(2, {12, 5});
    CHECK(g.tensor_fp_dimension(2) == 3);
    CHECK(g.tensor_fp_dimension(3) == 3);
    CHECK(g.tensor_fp_dimension(5) == 3);
    CHECK(g.tensor_fp_dimension(7) == 2);

    // Z + Z/12 tensored with Z/4: 4 * gcd(12, 4) = 16.
    CHECK(AbelianGroup(1, {12}).tensor_zpk_order(2, 2) == 16);
    CHECK(AbelianGroup(0, {}).tensor_zpk_order(3, 2) == 1);
}

TEST_CASE("abelian group printing", "[abelian]") {
    CHECK(AbelianGroup().to_string() == "0");
    CHECK(AbelianGroup(1, {}).to_string() == "Z");
    CHECK(AbelianGroup(2, {2, 12}).to_string() == "Z^2 ⊕ Z/2 ⊕ Z/12");
    CHECK(AbelianGroup(0, {8}).to_string() == "Z/8");
}

TEST_CASE("cohomology of a two-step segment", "[smith]") {
    // 0 -> Z -(x2)-> Z -> 0 read at the middle spot: kernel of the zero map
    // out, modulo the image of multiplication by 2.
    const IntMatrix d_in = from_rows({{2}});
    const IntMatrix d_out(0, 1);
    CHECK(cohomology_of_segment(d_in, d_out) == AbelianGroup(0, {2}));

    // Z -(1,0)-> Z^2 -(0,1)-> Z: the kernel of the outgoing map is exactly
    // the image of the incoming one.
    const IntMatrix in2 = from_rows({{1}, {0}});
    const IntMatrix out2 = from_rows({{0, 1}});
    CHECK(cohomology_of_segment(in2, out2).is_trivial());
}

TEST_CASE("kernel structure modulo a prime power", "[smith]") {
    // diag(2, 3) acting on (Z/4)^2: kernel of 2 on Z/4 is Z/2, kernel of 3
    // is trivial.
    IntMatrix a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 3;
    CHECK(kernel_structure_mod_prime_power(a, 2, 2) == AbelianGroup(0, {2}));

    // Zero matrix: the whole of (Z/9)^2 survives.
    CHECK(kernel_structure_mod_prime_power(IntMatrix(2, 2), 3, 2) ==
          AbelianGroup(0, {9, 9}));

    CHECK(cokernel_order_mod_prime_power(a, 2, 2) == 2);
}

TEST_CASE("prime field row reduction", "[field]") {
    const IntMatrix a = from_rows({{2, 4}, {1, 2}});
    CHECK(fp_rank(a, 2) == 1);
    CHECK(fp_rank(a, 3) == 1);
    CHECK(fp_nullity(a, 3) == 1);

    const auto basis = fp_kernel_basis(a, 5);
    REQUIRE(basis.size() == 1);
    // The kernel vector satisfies the equations mod 5.
    for (std::size_t i = 0; i < 2; ++i) {
        long long dot = 0;
        for (std::size_t j = 0; j < 2; ++j)
            dot += static_cast<long long>(a(i, j)) * basis[0][j];
        CHECK(dot % 5 == 0);
    }
}

TEST_CASE("primality helper", "[field]") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}
