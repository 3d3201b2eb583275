#ifndef BRAIDCOH_ABELIAN_HPP
#define BRAIDCOH_ABELIAN_HPP

/**
 * Finitely generated abelian groups in invariant-factor form.
 *
 * A group is stored as Z^free_rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk with 2 <= d1 | d2 | ...
 * | dk.  That form is unique, so operator== is structural equality of
 * isomorphism classes.  Canonicalization is factorization-free (repeated
 * gcd/lcm exchanges), which keeps it cheap even for the large random moduli the
 * property tests throw at it.  Prime-power views (used for torsion reporting
 * and for comparisons against closed-form models) factor by trial division;
 * every torsion order produced by the cohomology computations in range is a
 * prime power with small prime, so this is never the bottleneck.
 */

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "intmatrix.hpp"

namespace braidcoh::exactalg {

class AbelianGroup {
  public:
    AbelianGroup() : free_rank_(0) {}

    /**
     * Build from a free rank and an arbitrary list of cyclic orders.  Orders
     * equal to 0 add free summands, orders 1 are dropped, negatives are taken
     * by absolute value, and the rest are rearranged into a divisor chain.
     */
    AbelianGroup(long long free_rank, std::vector<Int> orders)
        : free_rank_(free_rank) {
        if (free_rank < 0)
            throw std::invalid_argument("AbelianGroup: negative free rank");
        for (auto& d : orders) {
            if (d < 0) d = -d;
            if (d == 0)
                ++free_rank_;
            else if (d > 1)
                factors_.push_back(d);
        }
        canonicalize();
    }

    static AbelianGroup trivial() { return AbelianGroup(); }
    static AbelianGroup free_of_rank(long long r) { return AbelianGroup(r, {}); }

    long long free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }

    bool operator==(const AbelianGroup& o) const {
        return free_rank_ == o.free_rank_ && factors_ == o.factors_;
    }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

    AbelianGroup direct_sum(const AbelianGroup& o) const {
        std::vector<Int> all = factors_;
        all.insert(all.end(), o.factors_.begin(), o.factors_.end());
        return AbelianGroup(free_rank_ + o.free_rank_, std::move(all));
    }

    /** dim_{F_p}(G ⊗ F_p) = free rank + number of factors divisible by p. */
    long long tensor_fp_dimension(long long p) const {
        long long dim = free_rank_;
        for (const auto& d : factors_)
            if (d % p == 0) ++dim;
        return dim;
    }

    /** |G ⊗ Z/p^k| = p^{k·free} · prod gcd(d_i, p^k). */
    Int tensor_zpk_order(long long p, long long k) const {
        Int pk = 1;
        for (long long t = 0; t < k; ++t) pk *= p;
        Int order = 1;
        for (long long t = 0; t < free_rank_; ++t) order *= pk;
        for (const auto& d : factors_) order *= gcd(d, pk);
        return order;
    }

    /**
     * The p-primary torsion as a multiset of prime powers, ascending.
     * E.g. Z/12 ⊕ Z/2 at p=2 gives {2, 4}.
     */
    std::vector<Int> torsion_p(long long p) const {
        std::vector<Int> out;
        for (const auto& d : factors_) {
            Int q = 1, rest = d;
            while (rest % p == 0) {
                rest /= p;
                q *= p;
            }
            if (q > 1) out.push_back(q);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /**
     * Full primary decomposition of the torsion: all prime-power summands,
     * ascending.  Factors by trial division.
     */
    std::vector<Int> primary_decomposition() const {
        std::vector<Int> out;
        for (const auto& d : factors_) {
            Int rest = d;
            for (Int p = 2; p * p <= rest; ++p) {
                if (rest % p != 0) continue;
                Int q = 1;
                while (rest % p == 0) {
                    rest /= p;
                    q *= p;
                }
                out.push_back(q);
            }
            if (rest > 1) out.push_back(rest);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /** Total order of the torsion subgroup. */
    Int torsion_order() const {
        Int t = 1;
        for (const auto& d : factors_) t *= d;
        return t;
    }

    /** "0", "Z", "Z^2 ⊕ Z/2 ⊕ Z/12", ... */
    std::string to_string() const {
        if (is_trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank_ == 1) {
            os << "Z";
            first = false;
        } else if (free_rank_ > 1) {
            os << "Z^" << free_rank_;
            first = false;
        }
        for (const auto& d : factors_) {
            if (!first) os << " ⊕ ";
            os << "Z/" << d;
            first = false;
        }
        return os.str();
    }

  private:
    void canonicalize() {
        // Exchange passes (a, b) -> (gcd, lcm) until ascending chain holds.
        // Each pass preserves the isomorphism class; termination: the product
        // is invariant and gcd-exchanges strictly decrease the sorted tuple.
        bool changed = true;
        while (changed) {
            changed = false;
            std::sort(factors_.begin(), factors_.end());
            for (std::size_t i = 0; i + 1 < factors_.size(); ++i) {
                for (std::size_t j = i + 1; j < factors_.size(); ++j) {
                    if (factors_[j] % factors_[i] == 0) continue;
                    Int g = gcd(factors_[i], factors_[j]);
                    Int l = factors_[i] / g * factors_[j];
                    factors_[i] = g;
                    factors_[j] = l;
                    changed = true;
                }
            }
        }
        // Drop units created by exchanges.
        factors_.erase(std::remove(factors_.begin(), factors_.end(), Int(1)),
                       factors_.end());
    }

    long long free_rank_;
    std::vector<Int> factors_;
};

} // namespace braidcoh::exactalg

#endif
