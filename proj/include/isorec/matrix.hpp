#ifndef ISOREC_MATRIX_HPP
#define ISOREC_MATRIX_HPP

#include "isorec/rings.hpp"

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace isorec {

/// Dense square-or-rectangular matrix over one of the exact scalar domains.
/// All entries share the ring instance stored in the matrix.
template <class Ring>
class Matrix {
public:
    using value_type = typename Ring::value_type;

    Matrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

    static Matrix identity(const Ring& ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
        return m;
    }

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<value_type> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }
    std::vector<value_type> col(std::size_t j) const {
        std::vector<value_type> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
        const Ring& R = a.ring_;
        Matrix c(R, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const auto& ail = a(i, l);
                if (R.is_zero(ail)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = R.add(c(i, j), R.mul(ail, b(l, j)));
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix c(a.ring_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.ring_.add(a.data_[i], b.data_[i]);
        return c;
    }

    Matrix scaled(const value_type& s) const {
        Matrix c = *this;
        for (auto& v : c.data_) v = ring_.mul(v, s);
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Row vector times matrix.
    std::vector<value_type> left_apply(const std::vector<value_type>& v) const {
        assert(v.size() == rows_);
        std::vector<value_type> out(cols_, ring_.zero());
        for (std::size_t i = 0; i < rows_; ++i) {
            if (ring_.is_zero(v[i])) continue;
            for (std::size_t j = 0; j < cols_; ++j) out[j] = ring_.add(out[j], ring_.mul(v[i], (*this)(i, j)));
        }
        return out;
    }

    value_type trace() const {
        value_type t = ring_.zero();
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = ring_.add(t, (*this)(i, i));
        return t;
    }

    value_type determinant() const;
    std::size_t rank() const;

private:
    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

namespace detail {

// Bareiss fraction-free elimination; every division is exact over Z.
inline BigInt bareiss_determinant(std::vector<BigInt> a, std::size_t n) {
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
        prev = a[k * n + k];
    }
    return sign * a[(n - 1) * n + (n - 1)];
}

template <class Ring>
std::size_t field_row_reduce(const Ring& R, std::vector<typename Ring::value_type>& a, std::size_t rows,
                             std::size_t cols, typename Ring::value_type* det) {
    std::size_t rank = 0;
    auto d = R.one();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && R.is_zero(a[piv * cols + c])) ++piv;
        if (piv == rows) {
            d = R.zero();
            continue;
        }
        if (piv != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
            d = R.neg(d);
        }
        const auto pv = a[rank * cols + c];
        d = R.mul(d, pv);
        const auto inv = *R.inverse(pv);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const auto f = R.mul(a[i * cols + c], inv);
            if (R.is_zero(f)) continue;
            for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = R.sub(a[i * cols + j], R.mul(f, a[rank * cols + j]));
        }
        ++rank;
    }
    if (rank < rows) d = R.zero();
    if (det) *det = d;
    return rank;
}

template <class Ring>
std::vector<typename Ring::value_type> entries(const Matrix<Ring>& m) {
    std::vector<typename Ring::value_type> a;
    a.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m(i, j));
    return a;
}

} // namespace detail

template <class Ring>
typename Matrix<Ring>::value_type Matrix<Ring>::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    if constexpr (Ring::is_field) {
        auto a = detail::entries(*this);
        value_type d = ring_.one();
        detail::field_row_reduce(ring_, a, rows_, cols_, &d);
        return d;
    } else {
        return detail::bareiss_determinant(detail::entries(*this), rows_);
    }
}

template <class Ring>
std::size_t Matrix<Ring>::rank() const {
    static_assert(Ring::is_field, "rank is computed over fields only");
    auto a = detail::entries(*this);
    return detail::field_row_reduce(ring_, a, rows_, cols_, nullptr);
}

} // namespace isorec

#endif // ISOREC_MATRIX_HPP
