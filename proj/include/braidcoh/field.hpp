#ifndef BRAIDCOH_FIELD_HPP
#define BRAIDCOH_FIELD_HPP

/**
 * Linear algebra over prime fields F_p.
 *
 * Dimension counts over F_p (mod-p cohomology, invariant spaces, Dickson
 * independence checks) reduce the exact integer matrices modulo p and run a
 * plain Gaussian elimination in machine words.  Primes here are small (the
 * suites use p <= 59), but the code is correct for any p < 2^31 thanks to
 * 128-bit intermediate products.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "intmatrix.hpp"

namespace braidcoh::exactalg {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/** A dense matrix over F_p, entries normalized to [0, p). */
struct FpMatrix {
    long long p = 0;
    std::size_t rows = 0, cols = 0;
    std::vector<long long> a; // row-major

    long long& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    long long at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/** Reduce an integer matrix modulo p. */
inline FpMatrix reduce_mod_p(const IntMatrix& m, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("reduce_mod_p: p not prime");
    FpMatrix f;
    f.p = p;
    f.rows = m.rows();
    f.cols = m.cols();
    f.a.resize(f.rows * f.cols);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0; j < f.cols; ++j) {
            Int r = m(i, j) % p;
            if (r < 0) r += p;
            f.at(i, j) = static_cast<long long>(r);
        }
    return f;
}

inline long long fp_inverse(long long a, long long p) {
    // Extended Euclid; a must be nonzero mod p.
    long long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("fp_inverse: not invertible");
    return ((t % p) + p) % p;
}

namespace detail {
inline long long mulmod(long long a, long long b, long long p) {
    return static_cast<long long>(
        static_cast<__int128>(a) * b % p);
}
} // namespace detail

/**
 * In-place row echelon reduction; returns the rank and (optionally) records
 * the pivot columns.
 */
inline std::size_t fp_row_reduce(FpMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    const long long p = m.p;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap_ranges(m.a.begin() + rank * m.cols, m.a.begin() + (rank + 1) * m.cols,
                         m.a.begin() + piv * m.cols);
        const long long inv = fp_inverse(m.at(rank, col), p);
        for (std::size_t j = col; j < m.cols; ++j)
            m.at(rank, j) = detail::mulmod(m.at(rank, j), inv, p);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            const long long f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) {
                long long v = m.at(i, j) - detail::mulmod(f, m.at(rank, j), p);
                m.at(i, j) = ((v % p) + p) % p;
            }
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

inline std::size_t fp_rank(FpMatrix m) { return fp_row_reduce(m); }

inline std::size_t fp_rank(const IntMatrix& m, long long p) {
    FpMatrix f = reduce_mod_p(m, p);
    return fp_row_reduce(f);
}

inline std::size_t fp_nullity(const IntMatrix& m, long long p) {
    return m.cols() - fp_rank(m, p);
}

/**
 * Basis of the right kernel { v : m v = 0 } over F_p, one vector per
 * non-pivot column (the standard echelon back-substitution).
 */
inline std::vector<std::vector<long long>> fp_kernel_basis(const IntMatrix& m, long long p) {
    FpMatrix f = reduce_mod_p(m, p);
    std::vector<std::size_t> pivots;
    const std::size_t rank = fp_row_reduce(f, &pivots);
    std::vector<bool> is_pivot(f.cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<long long>> basis;
    for (std::size_t freec = 0; freec < f.cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<long long> v(f.cols, 0);
        v[freec] = 1;
        // Echelon rows read off the pivot coordinates directly.
        for (std::size_t r = 0; r < rank; ++r) {
            const long long coeff = f.at(r, freec);
            if (coeff != 0) v[pivots[r]] = p - coeff;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace braidcoh::exactalg

#endif
