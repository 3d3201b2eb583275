#ifndef BRAIDCOH_SMITH_HPP
#define BRAIDCOH_SMITH_HPP

/**
 * Smith normal form over Z and the cohomology of a two-step segment
 *
 *     C^{i-1} --d_in--> C^i --d_out--> C^{i+1}
 *
 * of a cochain complex of finitely generated free Z-modules.
 *
 * The reduction produces D = U·A·V with U, V unimodular and D diagonal with a
 * divisibility chain d_1 | d_2 | ... .  Besides U and V we track V^{-1}: it
 * costs one extra elementary operation per column step and turns kernel
 * membership into coordinate reading, which is exactly what the segment
 * cohomology needs.  Pivots are chosen by minimal absolute value, which keeps
 * the entry growth tame on the structured matrices this library produces.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "abelian.hpp"
#include "field.hpp"
#include "intmatrix.hpp"

namespace braidcoh::exactalg {

struct SmithNormalForm {
    IntMatrix d;            ///< the diagonal form, same shape as the input
    IntMatrix u;            ///< unimodular row transform
    IntMatrix v;            ///< unimodular column transform
    IntMatrix v_inv;        ///< inverse of v, maintained incrementally
    std::size_t rank = 0;   ///< number of nonzero diagonal entries
    std::vector<Int> diagonal; ///< the nonzero invariant factors, in chain order
};

namespace detail {

/** Quotient with remainder in (-|b|/2, |b|/2]; shrinks entries fastest. */
inline Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b; // truncated
    Int r = a - q * b;
    Int b2 = b < 0 ? -b : b;
    if (2 * r > b2)
        q += (b > 0 ? 1 : -1);
    else if (2 * r <= -b2)
        q -= (b > 0 ? 1 : -1);
    return q;
}

} // namespace detail

/**
 * Full Smith reduction.  Postconditions (all checked by the structural test
 * suite): u·a·v == d; |det u| == |det v| == 1; v·v_inv == I; d diagonal with
 * d(t,t) >= 0 and d(t,t) | d(t+1,t+1).
 */
inline SmithNormalForm smith_normal_form(const IntMatrix& a) {
    const std::size_t nr = a.rows(), nc = a.cols();
    SmithNormalForm s;
    s.d = a;
    s.u = IntMatrix::identity(nr);
    s.v = IntMatrix::identity(nc);
    s.v_inv = IntMatrix::identity(nc);
    IntMatrix& d = s.d;
    IntMatrix& u = s.u;
    IntMatrix& v = s.v;
    IntMatrix& vi = s.v_inv;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < nc; ++k) std::swap(d(i, k), d(j, k));
        for (std::size_t k = 0; k < nr; ++k) std::swap(u(i, k), u(j, k));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < nr; ++k) std::swap(d(k, i), d(k, j));
        for (std::size_t k = 0; k < nc; ++k) std::swap(v(k, i), v(k, j));
        for (std::size_t k = 0; k < nc; ++k) std::swap(vi(i, k), vi(j, k));
    };
    // row_i -= q * row_j
    auto row_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < nc; ++k) d(i, k) -= q * d(j, k);
        for (std::size_t k = 0; k < nr; ++k) u(i, k) -= q * u(j, k);
    };
    // col_i -= q * col_j;  inverse transform adds q * row_i to row_j of v_inv
    auto col_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < nr; ++k) d(k, i) -= q * d(k, j);
        for (std::size_t k = 0; k < nc; ++k) v(k, i) -= q * v(k, j);
        for (std::size_t k = 0; k < nc; ++k) vi(j, k) += q * vi(i, k);
    };
    auto col_negate = [&](std::size_t j) {
        for (std::size_t k = 0; k < nr; ++k) d(k, j) = -d(k, j);
        for (std::size_t k = 0; k < nc; ++k) v(k, j) = -v(k, j);
        for (std::size_t k = 0; k < nc; ++k) vi(j, k) = -vi(j, k);
    };

    // Running nonzero counts per row/column of the trailing block, used by
    // the pivot tie-break below.  Kept approximate (recomputed per step);
    // exactness does not matter, only the tendency toward sparse pivots.
    std::vector<std::size_t> row_nnz(nr), col_nnz(nc);

    // Locate a minimal-|value| entry in the trailing block; among equal
    // magnitudes prefer the one in the sparsest row + column (Markowitz
    // rule), which keeps fill-in down on block-structured matrices.
    auto find_pivot = [&](std::size_t t, std::size_t& pi, std::size_t& pj) {
        for (std::size_t i = t; i < nr; ++i) row_nnz[i] = 0;
        for (std::size_t j = t; j < nc; ++j) col_nnz[j] = 0;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j)
                if (d(i, j) != 0) {
                    ++row_nnz[i];
                    ++col_nnz[j];
                }
        bool found = false;
        std::size_t best_fill = 0;
        Int best = 0;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (d(i, j) == 0) continue;
                Int mag = d(i, j) < 0 ? -d(i, j) : d(i, j);
                const std::size_t fill = row_nnz[i] + col_nnz[j];
                if (!found || mag < best || (mag == best && fill < best_fill)) {
                    found = true;
                    best = std::move(mag);
                    best_fill = fill;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    };

    const std::size_t steps = nr < nc ? nr : nc;
    std::size_t r = steps; // first zero diagonal position
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(t, pi, pj)) {
            r = t;
            break; // trailing block is zero
        }
        // Reduce column t and row t one pass at a time, re-selecting the
        // globally smallest entry as pivot before every pass.  Leftover
        // remainders are at most half the working pivot, so the re-selected
        // pivot at least halves whenever a pass was incomplete; sticking
        // with a stale pivot here is what makes the naive algorithm blow up
        // (a two-sided Euclid with huge quotients feeding the off-pivot
        // entries back into each other).
        for (;;) {
            if (pi != t) row_swap(t, pi);
            if (pj != t) col_swap(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (d(i, t) == 0) continue;
                Int q = detail::nearest_quotient(d(i, t), d(t, t));
                if (q != 0) row_sub(i, t, q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d(t, j) == 0) continue;
                Int q = detail::nearest_quotient(d(t, j), d(t, t));
                if (q != 0) col_sub(j, t, q);
                if (d(t, j) != 0) clean = false;
            }
            if (clean) break;
            find_pivot(t, pi, pj); // never fails: (t,t) itself is nonzero
        }
    }

    // The matrix is diagonal; repair the divisibility chain pairwise.  For
    // positions t < w with d_t not dividing d_w, fold column w into column t
    // and rediagonalize the 2x2 block: (d_t, d_w) becomes (gcd, ±lcm).  All
    // intermediate entries stay bounded by lcm(d_t, d_w), so unlike an
    // in-loop enforcement this pass cannot feed back into elimination growth.
    for (std::size_t t = 0; t < r; ++t) {
        for (std::size_t w = t + 1; w < r; ++w) {
            if (d(w, w) % d(t, t) == 0) continue;
            col_sub(t, w, Int(-1)); // col_t += col_w, entry (w,t) = d_w
            for (;;) {
                if (d(w, t) != 0) {
                    Int q = detail::nearest_quotient(d(w, t), d(t, t));
                    if (q != 0) row_sub(w, t, q);
                    if (d(w, t) != 0) row_swap(t, w);
                    continue;
                }
                if (d(t, w) != 0) {
                    Int q = detail::nearest_quotient(d(t, w), d(t, t));
                    if (q != 0) col_sub(w, t, q);
                    if (d(t, w) != 0) col_swap(t, w);
                    continue;
                }
                break;
            }
        }
    }

    for (std::size_t t = 0; t < r; ++t) {
        if (d(t, t) < 0) col_negate(t);
        s.diagonal.push_back(d(t, t));
        ++s.rank;
    }
    return s;
}

/** Rank over Q (number of nonzero invariant factors). */
inline std::size_t integer_rank(const IntMatrix& a) {
    return smith_normal_form(a).rank;
}

/**
 * A lattice basis of ker(a) ⊆ Z^{cols}: the columns of V past the rank.
 * The span is saturated (a direct summand), as the structural suite checks.
 */
inline std::vector<std::vector<Int>> kernel_lattice_basis(const IntMatrix& a) {
    SmithNormalForm s = smith_normal_form(a);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = s.rank; j < a.cols(); ++j) {
        std::vector<Int> v(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) v[i] = s.v(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/**
 * Cohomology at the middle of   C^{i-1} --d_in--> C^i --d_out--> C^{i+1},
 * i.e. ker(d_out)/im(d_in), as an abstract abelian group.
 *
 * Method: Smith-reduce d_out; in the V^{-1} coordinate system, ker(d_out) is
 * the span of the last (cols - rank) coordinates, so the projection of
 * V^{-1}·d_in onto those coordinates presents the quotient, and one more Smith
 * form reads off its invariant factors.  The top coordinates of V^{-1}·d_in
 * must vanish (that is d_out ∘ d_in = 0, which is asserted).
 */
inline AbelianGroup cohomology_of_segment(const IntMatrix& d_in, const IntMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
        throw std::invalid_argument("cohomology_of_segment: shape mismatch");
    if (!(d_out * d_in).is_zero())
        throw std::invalid_argument("cohomology_of_segment: d_out * d_in != 0");

    SmithNormalForm s = smith_normal_form(d_out);
    const std::size_t n = d_out.cols();
    const std::size_t k = n - s.rank; // dim ker(d_out)

    IntMatrix y = (s.v_inv * d_in).row_slice(s.rank, n); // k x dim(C^{i-1})
    SmithNormalForm sy = smith_normal_form(y);

    std::vector<Int> factors(sy.diagonal.begin(), sy.diagonal.end());
    return AbelianGroup(static_cast<long long>(k - sy.rank), std::move(factors));
}

/** dim_{F_p} of the same segment with coefficients reduced mod p. */
inline long long segment_dimension_mod_p(const IntMatrix& d_in, const IntMatrix& d_out,
                                         long long p) {
    if (d_in.rows() != d_out.cols())
        throw std::invalid_argument("segment_dimension_mod_p: shape mismatch");
    const long long kernel = static_cast<long long>(fp_nullity(d_out, p));
    const long long image = static_cast<long long>(fp_rank(d_in, p));
    return kernel - image;
}

/**
 * Structure of { x in (Z/p^r)^{cols} : a·x ≡ 0 } as an abelian group.
 * From the Smith form: each invariant factor d_j contributes Z/gcd(d_j, p^r)
 * and each free kernel coordinate contributes Z/p^r.
 */
inline AbelianGroup kernel_structure_mod_prime_power(const IntMatrix& a, long long p,
                                                     long long r) {
    Int pr = 1;
    for (long long t = 0; t < r; ++t) pr *= p;
    SmithNormalForm s = smith_normal_form(a);
    std::vector<Int> orders;
    for (const auto& dj : s.diagonal) orders.push_back(gcd(dj, pr));
    for (std::size_t j = s.rank; j < a.cols(); ++j) orders.push_back(pr);
    return AbelianGroup(0, std::move(orders));
}

/**
 * |(Z/p^k)^{rows} / im(a)|: the order of the cokernel of a with Z/p^k
 * coefficients.  Invariant factors beyond the rank count as 0, so each
 * contributes a full p^k.
 */
inline Int cokernel_order_mod_prime_power(const IntMatrix& a, long long p, long long k) {
    Int pk = 1;
    for (long long t = 0; t < k; ++t) pk *= p;
    SmithNormalForm s = smith_normal_form(a);
    Int order = 1;
    for (const auto& dj : s.diagonal) order *= gcd(dj, pk);
    for (std::size_t j = s.rank; j < a.rows(); ++j) order *= pk;
    return order;
}

} // namespace braidcoh::exactalg

#endif
