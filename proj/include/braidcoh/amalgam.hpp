#ifndef BRAIDCOH_AMALGAM_HPP
#define BRAIDCOH_AMALGAM_HPP

/**
 * Cohomology of SL_2(Z) with symmetric-power coefficients, computed from its
 * amalgam decomposition Z_4 *_{Z_2} Z_6.
 *
 * The computation is the mapping cone of the restriction chain maps: with
 * C(m) the 2-periodic complex of the order-m subgroup,
 *
 *     D^0 = C^0(4) ⊕ C^0(6)
 *     D^i = C^i(4) ⊕ C^i(6) ⊕ C^{i-1}(2)      (i >= 1)
 *
 *     d(a, b)    = (d4 a, d6 b, -a + b)
 *     d(a, b, c) = (d4 a, d6 b, -r4 a + r6 b - d2 c)
 *
 * with a global minus sign on the restriction legs so that d ∘ d = 0 holds on
 * the nose (checked by the structural suite).  The long exact sequence of the
 * cone is the Mayer-Vietoris sequence; mayer_vietoris_consistency checks the
 * rank identities that exactness forces in the periodic range, but the cone
 * itself is always the authority for the answers.
 */

#include <stdexcept>
#include <vector>

#include "cyclic.hpp"

namespace braidcoh::amalgam {

using exactalg::AbelianGroup;
using exactalg::IntMatrix;
using symmod::Weight;

/**
 * The degree-i differential D^i -> D^{i+1} of the cone complex, as one block
 * matrix.  Shapes: 3r x 2r for i = 0, 3r x 3r for i >= 1, with r = rank(M_n).
 */
inline IntMatrix cone_differential(long long i, const Weight& w) {
    if (i < 0) throw std::invalid_argument("cone_differential: negative degree");
    const std::size_t r = w.rank();
    const IntMatrix d4 = cyclic::differential(4, i, w);
    const IntMatrix d6 = cyclic::differential(6, i, w);
    if (i == 0) {
        IntMatrix m(3 * r, 2 * r);
        m.paste(0, 0, d4);
        m.paste(r, r, d6);
        m.paste(2 * r, 0, -IntMatrix::identity(r));
        m.paste(2 * r, r, IntMatrix::identity(r));
        return m;
    }
    const IntMatrix r4 = cyclic::restriction_matrix(4, i, w);
    const IntMatrix r6 = cyclic::restriction_matrix(6, i, w);
    const IntMatrix d2 = cyclic::differential(2, i - 1, w);
    IntMatrix m(3 * r, 3 * r);
    m.paste(0, 0, d4);
    m.paste(r, r, d6);
    m.paste(2 * r, 0, -r4);
    m.paste(2 * r, r, r6);
    m.paste(2 * r, 2 * r, -d2);
    return m;
}

/** H^i(SL_2(Z); M_n) over Z. */
inline AbelianGroup cohomology(long long i, const Weight& w) {
    const std::size_t r = w.rank();
    const IntMatrix d_out = cone_differential(i, w);
    const IntMatrix d_in =
        i == 0 ? IntMatrix::zero(2 * r, 0) : cone_differential(i - 1, w);
    return exactalg::cohomology_of_segment(d_in, d_out);
}

/** dim_{F_p} H^i(SL_2(Z); M_n ⊗ F_p), from the cone reduced mod p. */
inline long long cohomology_dimension_mod_p(long long i, const Weight& w, long long p) {
    const std::size_t r = w.rank();
    const IntMatrix d_out = cone_differential(i, w);
    const IntMatrix d_in =
        i == 0 ? IntMatrix::zero(2 * r, 0) : cone_differential(i - 1, w);
    return exactalg::segment_dimension_mod_p(d_in, d_out, p);
}

/**
 * Exactness-driven consistency checks on the cone's long exact sequence
 *
 *   ... -> H^{i-1}(Z_2) -> H^i(D) -> H^i(Z_4) ⊕ H^i(Z_6) -> H^i(Z_2) -> ...
 *
 * In the 2-periodic range (all cochain degrees >= 2, taken mod p) every third
 * term repeats with period 2, so the alternating sum of dimensions over one
 * full six-term period must vanish; every link also satisfies the two-sided
 * exactness bound dim(middle) <= dim(left) + dim(right).
 */
struct MayerVietorisReport {
    bool alternating_sum_zero = true;
    bool local_bounds = true;

    bool all() const { return alternating_sum_zero && local_bounds; }
};

inline MayerVietorisReport mayer_vietoris_consistency(long long i, const Weight& w,
                                                      long long p) {
    if (i < 2)
        throw std::invalid_argument(
            "mayer_vietoris_consistency: periodic range starts at degree 2");
    MayerVietorisReport rep;
    auto a = [&](long long j) { return cohomology_dimension_mod_p(j, w, p); };
    auto b = [&](long long j) {
        return cyclic::cohomology_dimension_mod_p(4, j, w, p) +
               cyclic::cohomology_dimension_mod_p(6, j, w, p);
    };
    auto c = [&](long long j) { return cyclic::cohomology_dimension_mod_p(2, j, w, p); };

    // One period of ... c_{i-1} -> a_i -> b_i -> c_i -> a_{i+1} -> b_{i+1} -> ...
    const long long alt =
        c(i - 1) - a(i) + b(i) - c(i) + a(i + 1) - b(i + 1);
    rep.alternating_sum_zero = (alt == 0);

    rep.local_bounds = a(i) <= c(i - 1) + b(i) && b(i) <= a(i) + c(i) &&
                       c(i) <= b(i) + a(i + 1);
    return rep;
}

} // namespace braidcoh::amalgam

#endif
