#ifndef BRAIDCOH_POLYINV_HPP
#define BRAIDCOH_POLYINV_HPP

/**
 * Rings of invariant polynomials: the H^0 side of the story.
 *
 * Invariants of the finite cyclic subgroups acting on Z[x,y] (integrally and
 * mod 2 / mod 3) have explicit finite presentations; over F_p the full
 * SL_2(Z)-invariants are the Dickson algebra F_p[P_p, Q_p].  This module
 * carries
 *
 *   - exact sparse bivariate polynomials with substitution,
 *   - computed invariant bases (integral lattice, F_p vector space, and the
 *     module structure over Z/p^r),
 *   - the named generators and relations of the six presentations, plus
 *     degreewise generation checks by dimension count against normal forms,
 *   - the Dickson generators with their defining identities and a mod-p
 *     verification (invariance, independence, dimension match),
 *   - the mod-p^r invariant structure check against the expected multiset
 *     (which is also what universal coefficients predicts from the
 *     degree-one torsion).
 */

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclic.hpp"
#include "dividedpower.hpp"
#include "field.hpp"
#include "smith.hpp"
#include "symmod.hpp"

namespace braidcoh::polyinv {

using exactalg::AbelianGroup;
using exactalg::Int;
using exactalg::IntMatrix;
using symmod::GroupWord;
using symmod::Mat2;
using symmod::Weight;

/**
 * Sparse polynomial in x, y with integer coefficients, keyed by exponent
 * pairs.  Suited to the sizes here (degrees up to a few hundred, few terms).
 */
class BivariatePoly {
  public:
    using Key = std::pair<long long, long long>; // (exponent of x, exponent of y)

    BivariatePoly() = default;

    static BivariatePoly zero() { return {}; }
    static BivariatePoly monomial(long long ex, long long ey, Int c = 1) {
        BivariatePoly p;
        if (c != 0) p.terms_[{ex, ey}] = std::move(c);
        return p;
    }
    static BivariatePoly x() { return monomial(1, 0); }
    static BivariatePoly y() { return monomial(0, 1); }
    static BivariatePoly constant(Int c) { return monomial(0, 0, std::move(c)); }

    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivariatePoly& o) const { return !(*this == o); }

    BivariatePoly operator+(const BivariatePoly& o) const {
        BivariatePoly r(*this);
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    BivariatePoly operator-(const BivariatePoly& o) const {
        BivariatePoly r(*this);
        for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
        return r;
    }
    BivariatePoly operator-() const { return zero() - *this; }

    BivariatePoly operator*(const BivariatePoly& o) const {
        BivariatePoly r;
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }
    BivariatePoly operator*(const Int& c) const {
        BivariatePoly r;
        if (c == 0) return r;
        for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
        return r;
    }

    BivariatePoly pow(long long e) const {
        BivariatePoly r = constant(1);
        for (long long t = 0; t < e; ++t) r = r * (*this);
        return r;
    }

    /** Coefficientwise reduction to representatives in [0, p). */
    BivariatePoly reduced_mod(long long p) const {
        BivariatePoly r;
        for (const auto& [k, v] : terms_) {
            Int c = v % p;
            if (c < 0) c += p;
            if (c != 0) r.terms_[k] = c;
        }
        return r;
    }

    /**
     * Substitution by g = [[a,b],[c,d]] in the column-image convention:
     * x -> a x + c y, y -> b x + d y — the same convention as the matrix
     * action on M_n, so coordinates(P.substituted(g)) == action · coordinates(P).
     */
    BivariatePoly substituted(const Mat2& g) const {
        const BivariatePoly img_x =
            monomial(1, 0, g.a) + monomial(0, 1, g.c);
        const BivariatePoly img_y =
            monomial(1, 0, g.b) + monomial(0, 1, g.d);
        BivariatePoly r;
        for (const auto& [k, v] : terms_) {
            BivariatePoly t = img_x.pow(k.first) * img_y.pow(k.second) * v;
            r = r + t;
        }
        return r;
    }

    /** True if every term has total degree d. */
    bool is_homogeneous_of_poly_degree(long long d) const {
        for (const auto& [k, v] : terms_)
            if (k.first + k.second != d) return false;
        return true;
    }

    /** Coordinates in the basis x^d, x^{d-1}y, ..., y^d of M_{2d}. */
    std::vector<Int> coordinates(const Weight& w) const {
        const long long d = w.poly_degree();
        if (!is_homogeneous_of_poly_degree(d))
            throw std::invalid_argument("BivariatePoly: wrong homogeneous degree");
        std::vector<Int> v(w.rank());
        for (const auto& [k, c] : terms_) v[static_cast<std::size_t>(k.second)] = c;
        return v;
    }

    static BivariatePoly from_coordinates(const std::vector<Int>& v, const Weight& w) {
        if (v.size() != w.rank())
            throw std::invalid_argument("BivariatePoly: coordinate length");
        const long long d = w.poly_degree();
        BivariatePoly p;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0)
                p.terms_[{d - static_cast<long long>(j), static_cast<long long>(j)}] = v[j];
        return p;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            Int mag = c < 0 ? Int(-c) : c;
            const bool unit = mag == 1 && (k.first != 0 || k.second != 0);
            if (!unit) s += mag.str();
            if (k.first > 0) s += "x" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second > 0) s += "y" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
        }
        return s;
    }

  private:
    void add_term(const Key& k, const Int& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (c != 0) terms_[k] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::map<Key, Int> terms_;
};

/* ------------------------------------------------------------------ */
/* Acting groups                                                       */
/* ------------------------------------------------------------------ */

/** Groups whose invariants this module computes. */
enum class Group { z2, z4, z6, sl2z };

/** The 2x2 substitution matrices generating the group's action. */
inline std::vector<Mat2> group_generators(Group g) {
    switch (g) {
        case Group::z2: return {symmod::mat2_action(GroupWord::w2())};
        case Group::z4: return {symmod::mat2_action(GroupWord::w4())};
        case Group::z6: return {symmod::mat2_action(GroupWord::w6())};
        default:
            return {symmod::mat2_action(GroupWord::s1()),
                    symmod::mat2_action(GroupWord::s2())};
    }
}

/** Stacked matrix whose kernel is the invariants: rows (T_g - 1) per generator. */
inline IntMatrix invariance_matrix(Group g, const Weight& w) {
    const auto gens = group_generators(g);
    IntMatrix stacked(0, w.rank());
    const IntMatrix id = IntMatrix::identity(w.rank());
    for (const auto& m2 : gens) {
        const IntMatrix t = symmod::symmetric_power_matrix(m2, w);
        stacked = stacked.rows() == 0 ? (t - id) : IntMatrix::vstack(stacked, t - id);
    }
    return stacked;
}

/** Basis of the integral invariant lattice in M_n (saturated). */
inline std::vector<BivariatePoly> invariant_basis(Group g, const Weight& w) {
    std::vector<BivariatePoly> out;
    for (const auto& v : exactalg::kernel_lattice_basis(invariance_matrix(g, w)))
        out.push_back(BivariatePoly::from_coordinates(v, w));
    return out;
}

/** Basis of the mod-p invariants of M_n ⊗ F_p. */
inline std::vector<BivariatePoly> invariant_basis_mod_p(Group g, const Weight& w,
                                                        long long p) {
    std::vector<BivariatePoly> out;
    for (const auto& v : exactalg::fp_kernel_basis(invariance_matrix(g, w), p)) {
        std::vector<Int> iv(v.begin(), v.end());
        out.push_back(BivariatePoly::from_coordinates(iv, w));
    }
    return out;
}

inline long long invariant_dimension(Group g, const Weight& w) {
    const IntMatrix m = invariance_matrix(g, w);
    return static_cast<long long>(m.cols() - exactalg::integer_rank(m));
}

inline long long invariant_dimension_mod_p(Group g, const Weight& w, long long p) {
    return static_cast<long long>(exactalg::fp_nullity(invariance_matrix(g, w), p));
}

/** Structure of the invariants of M_n ⊗ Z/p^r as an abelian group. */
inline AbelianGroup invariant_structure_mod_prime_power(Group g, const Weight& w,
                                                        long long p, long long r) {
    return exactalg::kernel_structure_mod_prime_power(invariance_matrix(g, w), p, r);
}

/* ------------------------------------------------------------------ */
/* Named generators and ring presentations                             */
/* ------------------------------------------------------------------ */

namespace gens {

inline BivariatePoly x() { return BivariatePoly::x(); }
inline BivariatePoly y() { return BivariatePoly::y(); }

// order 2, integral: Z[a2, b2, c2] / (a2 b2 = c2^2)
inline BivariatePoly a2() { return x().pow(2); }
inline BivariatePoly b2() { return y().pow(2); }
inline BivariatePoly c2() { return x() * y(); }

// order 4, integral: Z[d2, e4, f4] / (f4^2 = (d2^2 - 4 e4) e4)
inline BivariatePoly d2() { return x().pow(2) + y().pow(2); }
inline BivariatePoly e4() { return (x() * y()).pow(2); }
inline BivariatePoly f4() { return x().pow(3) * y() - x() * y().pow(3); }

// order 4, mod 2: free on the elementary symmetric functions
inline BivariatePoly sym1() { return x() + y(); }
inline BivariatePoly sym2() { return x() * y(); }

// order 6, integral: Z[p2, q6, r6] / (r6^2 = q6 (p2^3 - 13 q6 - 5 r6))
inline BivariatePoly p2() { return x().pow(2) + x() * y() + y().pow(2); }
inline BivariatePoly q6() { return (x() * y() * (x() + y())).pow(2); }
inline BivariatePoly r6() {
    return x().pow(5) * y() - (x().pow(3) * y().pow(3)) * 5 -
           (x().pow(2) * y().pow(4)) * 5 - x() * y().pow(5);
}

// order 6, mod 2: Z2[s2, t3, u3] / (u3^2 = s2^3 + t3^2 + t3 u3)
inline BivariatePoly s2() { return p2(); }
inline BivariatePoly t3() { return x() * y() * (x() + y()); }
inline BivariatePoly u3() { return x().pow(3) + x().pow(2) * y() + y().pow(3); }

// order 6, mod 3: Z3[v2, inv_w4, z6] / (inv_w4^2 = v2 z6); the group-element
// name w4 lives in symmod, the polynomial is inv_w4 throughout.
inline BivariatePoly v2() { return (x() - y()).pow(2); }
inline BivariatePoly inv_w4() { return x() * y() * (x() + y()) * (x() - y()); }
inline BivariatePoly z6() { return q6(); }

} // namespace gens

/** One generator of a presentation: name, polynomial, public degree. */
struct NamedGenerator {
    std::string name;
    BivariatePoly poly;
    long long degree; // public (even) degree = 2 * polynomial degree
};

/**
 * A finite presentation of an invariant ring: generators g1, g2, g3 with at
 * most one relation, always of the shape g3^2 = rhs, so monomials with
 * g3-exponent <= 1 are normal forms.  modulus = 0 means integral
 * coefficients.  Free presentations (no relation) have no g3.
 */
struct RingPresentation {
    std::string name;
    Group group;
    long long modulus; // 0 (integral), 2, or 3
    std::vector<NamedGenerator> generators;
    std::optional<BivariatePoly> relation_lhs; // g3^2
    std::optional<BivariatePoly> relation_rhs;

    /** Number of normal-form monomials in public degree n. */
    long long normal_form_count(long long n) const {
        const long long d1 = generators[0].degree;
        const long long d2 = generators[1].degree;
        if (generators.size() == 2) {
            long long count = 0;
            for (long long a = 0; a * d1 <= n; ++a)
                if ((n - a * d1) % d2 == 0) ++count;
            return count;
        }
        const long long d3 = generators[2].degree;
        long long count = 0;
        for (long long e3 = 0; e3 <= 1; ++e3) {
            const long long rem0 = n - e3 * d3;
            if (rem0 < 0) continue;
            for (long long a = 0; a * d1 <= rem0; ++a)
                if ((rem0 - a * d1) % d2 == 0) ++count;
        }
        return count;
    }
};

inline RingPresentation presentation(const std::string& name) {
    using namespace gens;
    auto mk = [](std::string n, Group g, long long mod, std::vector<NamedGenerator> gs,
                 std::optional<BivariatePoly> lhs,
                 std::optional<BivariatePoly> rhs) {
        return RingPresentation{std::move(n), g, mod, std::move(gs), std::move(lhs),
                                std::move(rhs)};
    };
    if (name == "z2-int")
        return mk(name, Group::z2, 0,
                  {{"a2", a2(), 4}, {"b2", b2(), 4}, {"c2", c2(), 4}},
                  c2() * c2(), a2() * b2());
    if (name == "z4-int")
        return mk(name, Group::z4, 0,
                  {{"d2", d2(), 4}, {"e4", e4(), 8}, {"f4", f4(), 8}},
                  f4() * f4(), (d2() * d2() - e4() * 4) * e4());
    if (name == "z4-mod2")
        return mk(name, Group::z4, 2, {{"sym1", sym1(), 2}, {"sym2", sym2(), 4}},
                  std::nullopt, std::nullopt);
    if (name == "z6-int")
        return mk(name, Group::z6, 0,
                  {{"p2", p2(), 4}, {"q6", q6(), 12}, {"r6", r6(), 12}},
                  r6() * r6(), q6() * (p2().pow(3) - q6() * 13 - r6() * 5));
    if (name == "z6-mod2")
        return mk(name, Group::z6, 2,
                  {{"s2", s2(), 4}, {"t3", t3(), 6}, {"u3", u3(), 6}},
                  u3() * u3(), s2().pow(3) + t3() * t3() + t3() * u3());
    if (name == "z6-mod3")
        return mk(name, Group::z6, 3,
                  {{"v2", v2(), 4}, {"z6", z6(), 12}, {"inv_w4", inv_w4(), 8}},
                  inv_w4() * inv_w4(), v2() * z6());
    throw std::invalid_argument("presentation: unknown name " + name);
}

inline std::vector<std::string> presentation_names() {
    return {"z2-int", "z4-int", "z4-mod2", "z6-int", "z6-mod2", "z6-mod3"};
}

/** Outcome of checking one presentation up to a degree bound. */
struct PresentationReport {
    bool generators_invariant = true;
    bool relation_holds = true;
    bool dimensions_match = true;          ///< normal-form count == computed dim
    std::vector<long long> mismatch_degrees;

    bool all() const {
        return generators_invariant && relation_holds && dimensions_match;
    }
};

/**
 * Check a named presentation: generator invariance under the acting group,
 * the relation as a polynomial identity (exact, or mod p for the modular
 * rings), and the degreewise generation count against the computed invariant
 * dimension for every even degree <= max_degree.
 */
inline PresentationReport verify_ring_presentation(const std::string& name,
                                                   long long max_degree) {
    const RingPresentation pres = presentation(name);
    PresentationReport rep;

    const auto group_gens = group_generators(pres.group);
    for (const auto& g : pres.generators) {
        for (const auto& m2 : group_gens) {
            BivariatePoly diff = g.poly.substituted(m2) - g.poly;
            if (pres.modulus != 0) diff = diff.reduced_mod(pres.modulus);
            if (!diff.is_zero()) rep.generators_invariant = false;
        }
    }

    if (pres.relation_lhs) {
        BivariatePoly diff = *pres.relation_lhs - *pres.relation_rhs;
        if (pres.modulus != 0) diff = diff.reduced_mod(pres.modulus);
        if (!diff.is_zero()) rep.relation_holds = false;
    }

    for (long long n = 0; n <= max_degree; n += 2) {
        const Weight w(n);
        const long long computed =
            pres.modulus == 0 ? invariant_dimension(pres.group, w)
                              : invariant_dimension_mod_p(pres.group, w, pres.modulus);
        if (computed != pres.normal_form_count(n)) {
            rep.dimensions_match = false;
            rep.mismatch_degrees.push_back(n);
        }
    }
    return rep;
}

/* ------------------------------------------------------------------ */
/* Dickson invariants                                                  */
/* ------------------------------------------------------------------ */

/** P_{p^k} = x y (x^{p^k - 1} - y^{p^k - 1}); public degree 2(p^k + 1). */
inline BivariatePoly dickson_p(long long p, long long k = 1) {
    long long q = 1;
    for (long long t = 0; t < k; ++t) q *= p;
    using gens::x;
    using gens::y;
    return x() * y() * (x().pow(q - 1) - y().pow(q - 1));
}

/** Q_p = sum_{h=0}^{p} x^{(p-1)(p-h)} y^{(p-1)h}; public degree 2p(p-1). */
inline BivariatePoly dickson_q(long long p) {
    BivariatePoly s;
    for (long long h = 0; h <= p; ++h)
        s = s + BivariatePoly::monomial((p - 1) * (p - h), (p - 1) * h);
    return s;
}

struct DicksonPair {
    BivariatePoly p_poly, q_poly;
    long long deg_p, deg_q; // public degrees 2(p+1) and 2p(p-1)
};

inline DicksonPair dickson_generators(long long p) {
    if (!exactalg::is_prime(p))
        throw std::invalid_argument("dickson_generators: p must be prime");
    return {dickson_p(p), dickson_q(p), 2 * (p + 1), 2 * p * (p - 1)};
}

/** The factorization P_{p^2} = P_p · Q_p, exact over Z. */
inline bool dickson_factorization_holds(long long p) {
    return dickson_p(p, 2) == dickson_p(p) * dickson_q(p);
}

/** Outcome of the mod-p full-invariants check in one degree. */
struct DicksonDegreeReport {
    long long degree = 0;
    long long predicted_count = 0;  ///< number of monomials P^a Q^b of this degree
    long long computed_dimension = 0;
    bool monomials_invariant = true;
    bool monomials_independent = true;

    bool all() const {
        return predicted_count == computed_dimension && monomials_invariant &&
               monomials_independent;
    }
};

/**
 * In public degree n, the mod-p SL_2(Z)-invariants should be spanned freely by
 * the monomials P_p^a Q_p^b with deg = n.  Checks invariance of each monomial,
 * linear independence of their coordinate vectors over F_p, and equality of
 * the count with the computed invariant dimension.
 */
inline DicksonDegreeReport verify_dickson_mod_p(long long p, const Weight& w) {
    const DicksonPair dk = dickson_generators(p);
    DicksonDegreeReport rep;
    rep.degree = w.degree();

    std::vector<BivariatePoly> monomials;
    for (long long a = 0; a * dk.deg_p <= w.degree(); ++a) {
        const long long rem = w.degree() - a * dk.deg_p;
        if (rem % dk.deg_q != 0) continue;
        monomials.push_back(
            (dk.p_poly.pow(a) * dk.q_poly.pow(rem / dk.deg_q)).reduced_mod(p));
    }
    rep.predicted_count = static_cast<long long>(monomials.size());

    const auto group_gens = group_generators(Group::sl2z);
    for (const auto& m : monomials)
        for (const auto& g : group_gens)
            if (!(m.substituted(g) - m).reduced_mod(p).is_zero())
                rep.monomials_invariant = false;

    if (!monomials.empty()) {
        IntMatrix coords(w.rank(), monomials.size());
        for (std::size_t j = 0; j < monomials.size(); ++j) {
            const auto v = monomials[j].coordinates(w);
            for (std::size_t i = 0; i < v.size(); ++i) coords(i, j) = v[i];
        }
        rep.monomials_independent =
            exactalg::fp_rank(coords, p) == monomials.size();
    }

    rep.computed_dimension = invariant_dimension_mod_p(Group::sl2z, w, p);
    return rep;
}

/**
 * Mod-p^r invariants of the full group: the computed module structure against
 * the expected multiset { p^{min(r, v_p(gcd(a,b)) + 1)} } over the monomial
 * degrees 2(p+1)a + 2p(p-1)b = n, (a,b) != (0,0).  (This is also what
 * universal coefficients predicts from the degree-one torsion model.)
 */
inline bool verify_steinberg_mod_pr(long long p, long long r, const Weight& w) {
    if (w.degree() == 0) return true; // constants: Z/p^r, nothing to check
    std::vector<Int> expected;
    for (const auto& t : dividedpower::h1_model(p, w.degree())) {
        Int pr = 1;
        for (long long k = 0; k < r; ++k) pr *= p;
        expected.push_back(t < pr ? t : pr); // min(p^{m+1}, p^r) as integers
    }
    const AbelianGroup computed = invariant_structure_mod_prime_power(Group::sl2z, w, p, r);
    return AbelianGroup(0, std::move(expected)) == computed;
}

} // namespace braidcoh::polyinv

#endif
