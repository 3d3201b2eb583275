#ifndef BRAIDCOH_SYMMOD_HPP
#define BRAIDCOH_SYMMOD_HPP

/**
 * The braid group B_3 = <s1, s2 | s1 s2 s1 = s2 s1 s2>, its representation
 * into SL_2(Z), and the induced action on symmetric powers of the defining
 * 2-dimensional module.
 *
 * The coefficient module in public degree n (n even; deg x = deg y = 2) is the
 * lattice M_n of homogeneous polynomials of polynomial degree d = n/2 in x, y,
 * with ordered basis x^d, x^{d-1}y, ..., y^d.  The generators act by the
 * substitutions
 *
 *     s1: x -> x - y, y -> y        s2: x -> x, y -> x + y
 *
 * and substitutions compose as a right action: for words u, v
 *
 *     action(uv) = action(v) · action(u).
 *
 * All fixed tables in this library (invariant rings, orbit decompositions,
 * torsion tables) are stated for exactly these substitution matrices, and the
 * degree-2 invariant x^2 + xy + y^2 of the order-6 element pins the
 * composition order: it is fixed by action(w6) and not by the reversed
 * product.  Cochain complexes that need a genuine left module (the free
 * resolution of B_3) use left_action_matrix(w) = action_matrix(w^{-1}), which
 * is a homomorphism with the same fixed vectors letter by letter.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "intmatrix.hpp"

namespace braidcoh::symmod {

using exactalg::Int;
using exactalg::IntMatrix;

/**
 * A coefficient degree.  Public degree n must be even and non-negative; the
 * polynomial degree d = n/2 and the lattice rank d + 1 are derived views.
 */
class Weight {
  public:
    explicit Weight(long long n) : n_(n) {
        if (n < 0) throw std::invalid_argument("Weight: degree must be >= 0");
        if (n % 2 != 0)
            throw std::invalid_argument(
                "Weight: degree must be even (x and y both sit in degree 2)");
    }

    long long degree() const { return n_; }
    long long poly_degree() const { return n_ / 2; }
    std::size_t rank() const { return static_cast<std::size_t>(n_ / 2 + 1); }

    bool operator==(const Weight& o) const { return n_ == o.n_; }

  private:
    long long n_;
};

enum class Letter : std::uint8_t { s1, s1_inv, s2, s2_inv };

inline Letter inverse(Letter l) {
    switch (l) {
        case Letter::s1: return Letter::s1_inv;
        case Letter::s1_inv: return Letter::s1;
        case Letter::s2: return Letter::s2_inv;
        default: return Letter::s2;
    }
}

/** A word in the free group on s1, s2 (no automatic reduction). */
struct GroupWord {
    std::vector<Letter> letters;

    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

    static GroupWord identity() { return GroupWord(); }
    static GroupWord s1() { return GroupWord({Letter::s1}); }
    static GroupWord s2() { return GroupWord({Letter::s2}); }
    static GroupWord s1_inv() { return GroupWord({Letter::s1_inv}); }
    static GroupWord s2_inv() { return GroupWord({Letter::s2_inv}); }

    /** w4 = s1 s2 s1, of order 4 in SL_2(Z). */
    static GroupWord w4() { return s1() * s2() * s1(); }
    /** w6 = s1 s2, of order 6 in SL_2(Z). */
    static GroupWord w6() { return s1() * s2(); }
    /** w2 = w4^2 = w6^3, the central involution -Id of SL_2(Z). */
    static GroupWord w2() { return w4() * w4(); }
    /** c = (s1 s2)^6, the generator of the center of B_3. */
    static GroupWord central() { return w6().pow(6); }

    GroupWord operator*(const GroupWord& o) const {
        GroupWord r(*this);
        r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
        return r;
    }

    GroupWord inverse() const {
        GroupWord r;
        r.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            r.letters.push_back(symmod::inverse(*it));
        return r;
    }

    GroupWord pow(long long k) const {
        if (k < 0) return inverse().pow(-k);
        GroupWord r;
        for (long long t = 0; t < k; ++t) r = r * (*this);
        return r;
    }
};

/** 2x2 integer matrix; the SL_2(Z) image of a letter or word. */
struct Mat2 {
    Int a, b, c, d; // [[a, b], [c, d]]

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2 inverse_unimodular() const {
        Int det = a * d - b * c;
        if (det != 1 && det != -1)
            throw std::invalid_argument("Mat2: not unimodular");
        if (det == 1) return {d, -b, -c, a};
        return {-d, b, c, -a};
    }

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

/** SL_2(Z) images of the generators: s1 -> [[1,0],[-1,1]], s2 -> [[1,1],[0,1]]. */
inline Mat2 mat2_of(Letter l) {
    switch (l) {
        case Letter::s1: return {1, 0, -1, 1};
        case Letter::s1_inv: return {1, 0, 1, 1};
        case Letter::s2: return {1, 1, 0, 1};
        default: return {1, -1, 0, 1};
    }
}

/**
 * The accumulated 2x2 substitution of a word under the right-action
 * convention: each letter's matrix multiplies on the left, so
 * mat2_action(uv) = mat2_action(v) · mat2_action(u).
 *
 * Columns are images: the matrix [[a,b],[c,d]] encodes x -> a x + c y,
 * y -> b x + d y.
 */
inline Mat2 mat2_action(const GroupWord& w) {
    Mat2 acc = Mat2::identity();
    for (Letter l : w.letters) acc = mat2_of(l) * acc;
    return acc;
}

/** Accumulated 2x2 of the left-module evaluation, a genuine homomorphism. */
inline Mat2 mat2_left_action(const GroupWord& w) {
    Mat2 acc = Mat2::identity();
    for (Letter l : w.letters) acc = acc * mat2_of(symmod::inverse(l));
    return acc;
}

/**
 * The induced matrix on M_n for the substitution x -> a x + c y,
 * y -> b x + d y given by g = [[a,b],[c,d]].  Column k is the expansion of
 * (a x + c y)^{d-k} (b x + d y)^k in the monomial basis.  This is a
 * homomorphism in g, so a word's action can be assembled at the 2x2 level
 * first.
 */
inline IntMatrix symmetric_power_matrix(const Mat2& g, const Weight& w) {
    const std::size_t d = static_cast<std::size_t>(w.poly_degree());
    const std::size_t n = d + 1;

    // Powers of the two linear images, as coefficient vectors in x^i y^{deg-i}.
    // pow1[m] = (a x + c y)^m, pow2[m] = (b x + d y)^m.
    std::vector<std::vector<Int>> pow1(n), pow2(n);
    pow1[0] = {1};
    pow2[0] = {1};
    for (std::size_t m = 1; m < n; ++m) {
        pow1[m].assign(m + 1, 0);
        pow2[m].assign(m + 1, 0);
        for (std::size_t i = 0; i < m; ++i) {
            // multiply by (a x + c y): x-part shifts the x-exponent up
            pow1[m][i] += pow1[m - 1][i] * g.a;
            pow1[m][i + 1] += pow1[m - 1][i] * g.c;
            pow2[m][i] += pow2[m - 1][i] * g.b;
            pow2[m][i + 1] += pow2[m - 1][i] * g.d;
        }
    }

    IntMatrix res(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        // column k: (a x + c y)^{d-k} * (b x + d y)^k
        const auto& f = pow1[d - k];
        const auto& h = pow2[k];
        // f[i] is the coefficient of x^{d-k-i} y^i; same layout for h.
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == 0) continue;
            for (std::size_t j = 0; j < h.size(); ++j) {
                if (h[j] == 0) continue;
                res(i + j, k) += f[i] * h[j]; // y-exponent i + j = row index
            }
        }
    }
    return res;
}

/** Matrix of a word on M_n; action(uv) = action(v) · action(u). */
inline IntMatrix action_matrix(const GroupWord& word, const Weight& w) {
    return symmetric_power_matrix(mat2_action(word), w);
}

/**
 * Matrix of a word for left-module cochain complexes:
 * left_action_matrix(w) = action_matrix(w^{-1}), so that
 * left_action_matrix(uv) = left_action_matrix(u) · left_action_matrix(v).
 * Fixed vectors of a single generator are unchanged.
 */
inline IntMatrix left_action_matrix(const GroupWord& word, const Weight& w) {
    return symmetric_power_matrix(mat2_left_action(word), w);
}

/** Relation and order checks used by the structural suite and the CLI. */
struct RelationReport {
    bool braid_relation;      ///< action(s1 s2 s1) == action(s2 s1 s2)
    bool center_acts_trivially; ///< action((s1 s2)^6) == Id
    bool w4_order;            ///< action(w4)^2 == action(w2), ^4 == Id
    bool w6_order;            ///< action(w6)^3 == action(w2), ^6 == Id
    bool central_element_sign; ///< action(w2) == (-1)^{n/2} Id

    bool all() const {
        return braid_relation && center_acts_trivially && w4_order && w6_order &&
               central_element_sign;
    }
};

inline RelationReport verify_relations(const Weight& w) {
    RelationReport r{};
    const IntMatrix lhs = action_matrix(GroupWord::s1() * GroupWord::s2() * GroupWord::s1(), w);
    const IntMatrix rhs = action_matrix(GroupWord::s2() * GroupWord::s1() * GroupWord::s2(), w);
    r.braid_relation = (lhs == rhs);

    const IntMatrix id = IntMatrix::identity(w.rank());
    r.center_acts_trivially = (action_matrix(GroupWord::central(), w) == id);

    const IntMatrix t4 = action_matrix(GroupWord::w4(), w);
    const IntMatrix t6 = action_matrix(GroupWord::w6(), w);
    const IntMatrix t2 = action_matrix(GroupWord::w2(), w);
    r.w4_order = (t4 * t4 == t2) && (t2 * t2 == id);
    r.w6_order = (t6 * t6 * t6 == t2);

    IntMatrix signed_id = id;
    if (w.poly_degree() % 2 != 0) signed_id = -signed_id;
    r.central_element_sign = (t2 == signed_id);
    return r;
}

} // namespace braidcoh::symmod

#endif
