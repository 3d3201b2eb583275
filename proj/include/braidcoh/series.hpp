#ifndef BRAIDCOH_SERIES_HPP
#define BRAIDCOH_SERIES_HPP

/**
 * Exact rational generating functions.
 *
 * Every dimension sequence this project computes has a closed-form rational
 * generating function in the degree variable t (deg x = deg y = 2, so all
 * module degrees are even).  This header provides exact expansion of such
 * series by integer recurrence, a named catalog of every series the engine
 * verifies, elementwise comparison against computed sequences, and the
 * inclusion–exclusion identity tying the free-rank series to the three
 * finite-subgroup series.
 */

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "intmatrix.hpp"

namespace braidcoh::series {

using exactalg::Int;

/** Dense integer polynomial, index = degree in t. */
using Poly = std::vector<Int>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline Poly poly_neg(Poly a) {
    for (auto& c : a) c = -c;
    return a;
}

/** The polynomial 1 - t^k. */
inline Poly one_minus(std::size_t k) {
    Poly p(k + 1);
    p[0] = 1;
    p[k] = -1;
    return p;
}

/** The polynomial 1 + t^k. */
inline Poly one_plus(std::size_t k) {
    Poly p(k + 1);
    p[0] = 1;
    p[k] = 1;
    return p;
}

/** A single term c·t^k. */
inline Poly term(std::size_t k, Int c = 1) {
    Poly p(k + 1);
    p[k] = std::move(c);
    return p;
}

/**
 * Quotient of two integer polynomials, expanded exactly by the division
 * recurrence.  The denominator needs constant term ±1 for the Taylor
 * coefficients to be integers; all catalog entries satisfy that.
 */
class RationalSeries {
  public:
    RationalSeries() : num_{Int(0)}, den_{Int(1)} {}
    RationalSeries(Poly numerator, Poly denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.empty() || den_[0] == 0)
            throw std::invalid_argument("RationalSeries: denominator needs nonzero constant term");
    }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    /** Taylor coefficients for degrees 0..max_degree inclusive. */
    std::vector<Int> expand(long long max_degree) const {
        if (den_[0] != 1 && den_[0] != -1)
            throw std::invalid_argument("RationalSeries: constant term of denominator must be ±1");
        std::vector<Int> c(static_cast<std::size_t>(max_degree) + 1);
        for (std::size_t n = 0; n < c.size(); ++n) {
            Int acc = n < num_.size() ? num_[n] : Int(0);
            const std::size_t kmax = std::min(n, den_.size() - 1);
            for (std::size_t k = 1; k <= kmax; ++k) acc -= den_[k] * c[n - k];
            c[n] = den_[0] == 1 ? acc : -acc;
        }
        return c;
    }

    /** Single coefficient (expands up to that degree). */
    Int coefficient(long long degree) const { return expand(degree).back(); }

    RationalSeries operator+(const RationalSeries& o) const {
        return {poly_add(poly_mul(num_, o.den_), poly_mul(o.num_, den_)),
                poly_mul(den_, o.den_)};
    }
    RationalSeries operator-(const RationalSeries& o) const {
        return {poly_add(poly_mul(num_, o.den_), poly_neg(poly_mul(o.num_, den_))),
                poly_mul(den_, o.den_)};
    }
    RationalSeries operator*(const RationalSeries& o) const {
        return {poly_mul(num_, o.num_), poly_mul(den_, o.den_)};
    }

  private:
    Poly num_, den_;
};

/** A catalog entry: the series plus a one-line description of what it counts. */
struct CatalogEntry {
    RationalSeries series;
    std::string description;
};

/**
 * The named series catalog.  Identifiers are stable API for the CLI.
 * Degree variable t tracks the module degree n (always even).
 */
inline const std::map<std::string, CatalogEntry>& catalog() {
    static const std::map<std::string, CatalogEntry> entries = [] {
        std::map<std::string, CatalogEntry> c;
        auto put = [&c](const std::string& name, Poly num, Poly den,
                        std::string desc) {
            c.emplace(name, CatalogEntry{RationalSeries(std::move(num), std::move(den)),
                                         std::move(desc)});
        };

        // --- order-2 subgroup -------------------------------------------
        put("z2-even", one_plus(4), poly_mul(one_minus(4), one_minus(4)),
            "order-2 group, even cohomological index: free rank at index 0, "
            "number of order-2 summands at even index > 0");
        put("z2-odd", term(2, 2), poly_mul(one_minus(4), one_minus(4)),
            "order-2 group, odd cohomological index: number of order-2 summands");

        // --- order-4 subgroup -------------------------------------------
        put("z4-even", one_plus(8), poly_mul(one_minus(4), one_minus(8)),
            "order-4 group, even index: free rank at index 0, number of "
            "2-power summands at even index > 0");
        put("z4-odd",
            poly_add(poly_add(term(2), term(4)), poly_add(term(6), term(8, -1))),
            poly_mul(one_minus(4), one_minus(8)),
            "order-4 group, odd index: number of order-2 summands");
        put("z4-4tors", {Int(1)}, one_minus(8),
            "order-4 group, even index >= 2: number of order-4 summands "
            "(one exactly when the degree is divisible by 8)");
        put("z4-inv-mod2", {Int(1)}, poly_mul(one_minus(2), one_minus(4)),
            "order-4 group: dimension of the mod-2 invariants (free on the "
            "two elementary symmetric polynomials)");

        // --- order-6 subgroup -------------------------------------------
        put("z6-even", one_plus(12), poly_mul(one_minus(4), one_minus(12)),
            "order-6 group, even index: free rank at index 0, number of "
            "even-order summands at even index > 0");
        put("z6-even-mod3", {Int(1)}, one_minus(12),
            "order-6 group, even index > 0: number of summands of order "
            "divisible by 3");
        put("z6-odd-mod2", term(6, 2), poly_mul(one_minus(4), one_minus(12)),
            "order-6 group, odd index: number of summands of even order");
        put("z6-odd-mod3", term(8), one_minus(12),
            "order-6 group, odd index: number of summands of order divisible by 3");
        put("z6-inv-int", one_plus(12), poly_mul(one_minus(4), one_minus(12)),
            "order-6 group: rank of the integral invariant lattice "
            "(generators of degree 4, 12, 12 with one relation)");
        put("z6-inv-mod2", one_plus(6), poly_mul(one_minus(4), one_minus(6)),
            "order-6 group: dimension of the mod-2 invariants (generators of "
            "degree 4, 6, 6 with one relation)");
        put("z6-inv-mod3", one_plus(8), poly_mul(one_minus(4), one_minus(12)),
            "order-6 group: dimension of the mod-3 invariants (generators of "
            "degree 4, 8, 12 with one relation)");

        // --- braid group / amalgam --------------------------------------
        put("b3-free",
            poly_add(poly_add(term(4), term(8)), poly_add(term(16, -1), term(20))),
            poly_mul(one_minus(8), one_minus(12)),
            "common free rank of the first and second cohomology of the braid "
            "group (and first of the amalgam) in degrees n > 0");
        put("sl2z-h2-mod2",
            poly_add(poly_add(poly_add(term(0), term(4, -1)), poly_add(term(6, 2), term(8, -1))),
                     term(12)),
            poly_mul(poly_mul(one_minus(2), one_plus(6)), one_minus(8)),
            "amalgam H^2: number of summands of even order (equals the "
            "mod-2 dimension of H^2 tensor F_2; all torsion)");
        put("sl2z-h3-mod2",
            poly_add(poly_add(poly_add(term(4, 2), term(6, -1)), poly_add(term(8), term(10))),
                     term(12, -1)),
            poly_mul(poly_mul(one_minus(2), one_plus(6)), one_minus(8)),
            "amalgam H^3: number of summands of even order");
        put("sl2z-h2-mod3", {Int(1)}, one_minus(12),
            "amalgam H^2: number of summands of order divisible by 3");
        put("sl2z-h3-mod3", term(8), one_minus(12),
            "amalgam H^3: number of summands of order divisible by 3");

        // --- degree-one torsion counts per prime ------------------------
        auto h1_torsion = [&put](long long p) {
            const std::size_t a = static_cast<std::size_t>(2 * (p + 1));
            const std::size_t b = static_cast<std::size_t>(2 * p * (p - 1));
            put("sl2z-h1-tors-mod" + std::to_string(p),
                poly_add(poly_add(term(a), term(b)), term(a + b, -1)),
                poly_mul(one_minus(a), one_minus(b)),
                "number of " + std::to_string(p) +
                    "-power torsion summands in degree-one cohomology "
                    "(both groups): counts invariant monomials in the two "
                    "generators of degree " + std::to_string(a) + " and " +
                    std::to_string(b));
        };
        h1_torsion(2);
        h1_torsion(3);
        h1_torsion(5);
        h1_torsion(7);

        return c;
    }();
    return entries;
}

/** Catalog lookup; throws with the list of valid names on a miss. */
inline const CatalogEntry& catalog_entry(const std::string& name) {
    const auto& c = catalog();
    auto it = c.find(name);
    if (it == c.end()) {
        std::string msg = "unknown series '" + name + "'; available:";
        for (const auto& [k, v] : c) msg += " " + k;
        throw std::invalid_argument(msg);
    }
    return it->second;
}

/** Elementwise comparison of a computed sequence against a catalog series. */
struct ComparisonReport {
    bool match = true;
    long long first_mismatch_degree = -1;
    Int expected_at_mismatch = 0;
    Int computed_at_mismatch = 0;
};

/**
 * Compare computed[d] (indexed by degree, 0-based, full integer range)
 * against the named series for every degree < computed.size().
 */
inline ComparisonReport compare(const std::string& name,
                                const std::vector<Int>& computed) {
    ComparisonReport rep;
    if (computed.empty()) return rep;
    const auto expected =
        catalog_entry(name).series.expand(static_cast<long long>(computed.size()) - 1);
    for (std::size_t d = 0; d < computed.size(); ++d) {
        if (computed[d] != expected[d]) {
            rep.match = false;
            rep.first_mismatch_degree = static_cast<long long>(d);
            rep.expected_at_mismatch = expected[d];
            rep.computed_at_mismatch = computed[d];
            return rep;
        }
    }
    return rep;
}

/**
 * The inclusion–exclusion identity behind the free-rank series: the rank of
 * the amalgam's degree-one cohomology equals
 *   1 - (even-index order-4 series + even-index order-6 series)
 *     + even-index order-2 series
 * coefficientwise.  Checks it against the catalog's "b3-free" up to
 * max_degree; returns the first failing degree or -1.
 */
inline long long mv_euler_identity(long long max_degree) {
    const auto lhs = catalog_entry("b3-free").series.expand(max_degree);
    const auto e4 = catalog_entry("z4-even").series.expand(max_degree);
    const auto e6 = catalog_entry("z6-even").series.expand(max_degree);
    const auto e2 = catalog_entry("z2-even").series.expand(max_degree);
    for (long long n = 0; n <= max_degree; ++n) {
        const Int rhs = (n == 0 ? Int(1) : Int(0)) - (e4[n] + e6[n]) + e2[n];
        if (lhs[n] != rhs) return n;
    }
    return -1;
}

} // namespace braidcoh::series

#endif
