#ifndef BRAIDCOH_CYCLIC_HPP
#define BRAIDCOH_CYCLIC_HPP

/**
 * Cohomology of the finite cyclic subgroups of SL_2(Z) with coefficients in
 * the symmetric powers, computed from the standard 2-periodic resolution.
 *
 * For the order-m subgroup generated by T = action(w_m), m in {2, 4, 6}, the
 * cochain complex has C^i = M_n for all i >= 0 with differentials alternating
 *
 *     d^{2i}   = T - 1          d^{2i+1} = N = 1 + T + ... + T^{m-1}.
 *
 * Everything is exact over Z; mod-p answers reduce the same complex mod p
 * (they are never inferred from the integral answer).  The closed-form models
 * (the order-2 parity table and the order-4 orbit table) live here too, next
 * to the machinery they predict, so the test suites can compare computed
 * against predicted groups degree by degree.
 *
 * The restriction maps to the order-2 subgroup (identity in even cochain
 * degrees, 1 + T + ... + T^{m/2-1} in odd ones) are the chain maps the
 * amalgam's mapping cone is built from.
 */

#include <array>
#include <stdexcept>

#include "abelian.hpp"
#include "smith.hpp"
#include "symmod.hpp"

namespace braidcoh::cyclic {

using exactalg::AbelianGroup;
using exactalg::Int;
using exactalg::IntMatrix;
using symmod::GroupWord;
using symmod::Weight;

inline void require_order(long long m) {
    if (m != 2 && m != 4 && m != 6)
        throw std::invalid_argument("cyclic: order must be 2, 4, or 6");
}

/** The generator's matrix on M_n: action of w2, w4, or w6. */
inline IntMatrix generator_matrix(long long m, const Weight& w) {
    require_order(m);
    switch (m) {
        case 2: return symmod::action_matrix(GroupWord::w2(), w);
        case 4: return symmod::action_matrix(GroupWord::w4(), w);
        default: return symmod::action_matrix(GroupWord::w6(), w);
    }
}

/** N = 1 + T + ... + T^{m-1}. */
inline IntMatrix norm_matrix(long long m, const Weight& w) {
    require_order(m);
    const IntMatrix t = generator_matrix(m, w);
    IntMatrix acc = IntMatrix::identity(w.rank());
    IntMatrix sum = acc;
    for (long long j = 1; j < m; ++j) {
        acc = t * acc;
        sum = sum + acc;
    }
    return sum;
}

/** d^i of the 2-periodic cochain complex (i >= 0). */
inline IntMatrix differential(long long m, long long i, const Weight& w) {
    require_order(m);
    if (i < 0) throw std::invalid_argument("cyclic: negative cochain degree");
    if (i % 2 == 0)
        return generator_matrix(m, w) - IntMatrix::identity(w.rank());
    return norm_matrix(m, w);
}

/** H^i(Z_m; M_n) over Z. */
inline AbelianGroup cohomology(long long m, long long i, const Weight& w) {
    const IntMatrix d_out = differential(m, i, w);
    const IntMatrix d_in = i == 0 ? IntMatrix::zero(w.rank(), 0) : differential(m, i - 1, w);
    return exactalg::cohomology_of_segment(d_in, d_out);
}

/** dim_{F_p} H^i(Z_m; M_n ⊗ F_p): the complex itself is reduced mod p. */
inline long long cohomology_dimension_mod_p(long long m, long long i, const Weight& w,
                                            long long p) {
    const IntMatrix d_out = differential(m, i, w);
    const IntMatrix d_in = i == 0 ? IntMatrix::zero(w.rank(), 0) : differential(m, i - 1, w);
    return exactalg::segment_dimension_mod_p(d_in, d_out, p);
}

/**
 * Degree-i piece of the chain map from the Z_m complex to the Z_2 complex
 * (m in {4, 6}): the identity in even degrees, 1 + T + ... + T^{m/2-1} in odd
 * degrees.  Satisfies r^{i+1} ∘ d_m^i = d_2^i ∘ r^i, which the structural
 * suite checks as a matrix identity.
 */
inline IntMatrix restriction_matrix(long long m, long long i, const Weight& w) {
    if (m != 4 && m != 6)
        throw std::invalid_argument("restriction_matrix: order must be 4 or 6");
    if (i < 0) throw std::invalid_argument("restriction_matrix: negative degree");
    if (i % 2 == 0) return IntMatrix::identity(w.rank());
    const IntMatrix t = generator_matrix(m, w);
    IntMatrix acc = IntMatrix::identity(w.rank());
    IntMatrix sum = acc;
    for (long long j = 1; j < m / 2; ++j) {
        acc = t * acc;
        sum = sum + acc;
    }
    return sum;
}

/* ------------------------------------------------------------------ */
/* Closed-form models                                                  */
/* ------------------------------------------------------------------ */

/**
 * Order-2 subgroup: w2 acts by (-1)^{n/2}, so the answer depends only on the
 * parity of the polynomial degree.  Even d: H^0 = Z^{d+1}, H^{odd} = 0,
 * H^{even>0} = (Z/2)^{d+1}.  Odd d: H^{even} = 0, H^{odd} = (Z/2)^{d+1}.
 */
inline AbelianGroup z2_closed_form(long long i, const Weight& w) {
    const long long r = static_cast<long long>(w.rank());
    const bool d_even = w.poly_degree() % 2 == 0;
    if (i == 0)
        return d_even ? AbelianGroup::free_of_rank(r) : AbelianGroup::trivial();
    const bool i_even = i % 2 == 0;
    if (d_even == i_even)
        return AbelianGroup(0, std::vector<Int>(static_cast<std::size_t>(r), Int(2)));
    return AbelianGroup::trivial();
}

/**
 * Monomial orbit classes of the order-4 action x -> -y, y -> x.  The class of
 * x^a y^b (a + b = d) is determined by the parities of a and b and whether the
 * pair {a, b} is a singleton:
 *
 *   I1: {x^{2i}y^{2j}, x^{2j}y^{2i}}, i != j     I2: {x^{2i}y^{2i}}
 *   I3: {x^{2i+1}y^{2i+1}}                       I4: both odd, i != j
 *   I5: one exponent odd, one even.
 */
struct Z4OrbitCounts {
    long long i1 = 0, i2 = 0, i3 = 0, i4 = 0, i5 = 0;
};

inline Z4OrbitCounts z4_orbit_decomposition(const Weight& w) {
    Z4OrbitCounts c;
    const long long d = w.poly_degree();
    for (long long b = 0; 2 * b <= d; ++b) { // count unordered pairs once
        const long long a = d - b;
        const bool ae = a % 2 == 0, be = b % 2 == 0;
        if (a == b) {
            (ae ? c.i2 : c.i3) += 1;
        } else if (ae && be) {
            c.i1 += 1;
        } else if (!ae && !be) {
            c.i4 += 1;
        } else {
            c.i5 += 1;
        }
    }
    return c;
}

/**
 * Predicted H^i(Z_4; M_n) assembled from the orbit classes:
 *
 *            I1      I2      I3      I4      I5
 *   H^0      Z       Z       0       Z       0
 *   H^odd    0       0       Z/2     0       Z/2
 *   H^even   Z/2     Z/4     0       Z/2     0     (even >= 2)
 */
inline AbelianGroup z4_orbit_model(long long i, const Weight& w) {
    const Z4OrbitCounts c = z4_orbit_decomposition(w);
    if (i == 0) return AbelianGroup::free_of_rank(c.i1 + c.i2 + c.i4);
    std::vector<Int> factors;
    if (i % 2 == 1) {
        factors.insert(factors.end(), static_cast<std::size_t>(c.i3 + c.i5), Int(2));
    } else {
        factors.insert(factors.end(), static_cast<std::size_t>(c.i1 + c.i4), Int(2));
        factors.insert(factors.end(), static_cast<std::size_t>(c.i2), Int(4));
    }
    return AbelianGroup(0, std::move(factors));
}

} // namespace braidcoh::cyclic

#endif
