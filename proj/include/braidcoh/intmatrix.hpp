#ifndef BRAIDCOH_INTMATRIX_HPP
#define BRAIDCOH_INTMATRIX_HPP

/**
 * Dense matrices over the integers with arbitrary-precision entries.
 *
 * Everything downstream (Smith forms, cochain differentials, invariant
 * lattices) is built on this type.  Entries are boost cpp_int: binomial
 * coefficients of the symmetric-power actions overflow 64 bits well before the
 * degrees the test suites reach, and all computations here must stay exact.
 *
 * Zero-row and zero-column matrices are first-class citizens; they appear
 * naturally as the (-1)-st differential of an augmented cochain complex.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcoh::exactalg {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    /** Row-major construction from a braced list, e.g. {{1,0},{-1,1}}. */
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix zero(std::size_t rows, std::size_t cols) {
        return IntMatrix(rows, cols);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        require_same_shape(o, "+");
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        require_same_shape(o, "-");
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
        return r;
    }

    IntMatrix operator-() const {
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
        return r;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("IntMatrix: shape mismatch in *");
        IntMatrix r(rows_, o.cols_);
        // i-k-j loop order keeps the inner traversal contiguous.
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += aik * o(k, j);
            }
        return r;
    }

    IntMatrix operator*(const Int& c) const {
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
        return r;
    }

    /** Matrix-vector product. */
    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (v.size() != cols_)
            throw std::invalid_argument("IntMatrix: vector length mismatch");
        std::vector<Int> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    IntMatrix transposed() const {
        IntMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /** Rows [r0, r1) of this matrix. */
    IntMatrix row_slice(std::size_t r0, std::size_t r1) const {
        if (r0 > r1 || r1 > rows_)
            throw std::invalid_argument("IntMatrix: bad row slice");
        IntMatrix r(r1 - r0, cols_);
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i - r0, j) = (*this)(i, j);
        return r;
    }

    /** Stack a on top of b (equal column counts). */
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols() != b.cols())
            throw std::invalid_argument("IntMatrix: vstack column mismatch");
        IntMatrix r(a.rows() + b.rows(), a.cols());
        r.paste(0, 0, a);
        r.paste(a.rows(), 0, b);
        return r;
    }

    /** Place a to the left of b (equal row counts). */
    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows() != b.rows())
            throw std::invalid_argument("IntMatrix: hstack row mismatch");
        IntMatrix r(a.rows(), a.cols() + b.cols());
        r.paste(0, 0, a);
        r.paste(0, a.cols(), b);
        return r;
    }

    /** Copy block src into this matrix with top-left corner at (i0, j0). */
    void paste(std::size_t i0, std::size_t j0, const IntMatrix& src) {
        if (i0 + src.rows() > rows_ || j0 + src.cols() > cols_)
            throw std::invalid_argument("IntMatrix: paste out of range");
        for (std::size_t i = 0; i < src.rows(); ++i)
            for (std::size_t j = 0; j < src.cols(); ++j)
                (*this)(i0 + i, j0 + j) = src(i, j);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? " " : "") << (*this)(i, j);
        }
        os << "]";
        return os.str();
    }

  private:
    void require_same_shape(const IntMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("IntMatrix: shape mismatch in ") + op);
    }

    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/**
 * Determinant by the Bareiss fraction-free elimination.  Exact at every step
 * (all divisions are known to be exact); used by tests to certify that the
 * transforms produced by the Smith reduction are unimodular.
 */
inline Int bareiss_determinant(IntMatrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("bareiss_determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

} // namespace braidcoh::exactalg

#endif
