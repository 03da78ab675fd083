/*
   Copyright 2026 The lctspin Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LCTSPIN_CORE_MATRIX_HPP
#define LCTSPIN_CORE_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/exact.hpp"

namespace lctspin {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Gaussian& z) { return z.is_zero(); }
inline bool is_zero(const ExactScalar& s) { return s.is_zero(); }

namespace detail {
// Unqualified so that entry types from other namespaces are found by ADL.
template <class T>
bool entry_is_zero(const T& v) {
    return is_zero(v);
}
}  // namespace detail

/// Row-major dense matrix over an exact ring. Products skip zero entries of
/// both operands, which makes monomial (Clifford) matrices cheap.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!detail::entry_is_zero(v)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Copy of the block of size (r, c) at (i0, j0).
    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        Matrix b(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

    void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!detail::entry_is_zero(data_[k])) m.data_[k] = -data_[k];
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!detail::entry_is_zero(o.data_[k])) data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!detail::entry_is_zero(o.data_[k])) data_[k] -= o.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw Error(ErrorKind::DimensionMismatch,
                        "matrix product " + a.shape() + " * " + b.shape());
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (detail::entry_is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (detail::entry_is_zero(bkj)) continue;
                    out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    template <class S>
    Matrix scaled(const S& s) const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!detail::entry_is_zero(data_[k])) m.data_[k] = T(s) * data_[k];
        return m;
    }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

   private:
    void check_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error(ErrorKind::DimensionMismatch, "matrix " + shape() + " " + op + " " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using GaussianMatrix = Matrix<Gaussian>;

/// Commutator AB - BA.
template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
    return a * b - b * a;
}

/// Largest entry magnitude (max of |re|, |im| for Gaussians).
Rational max_abs_entry(const RationalMatrix& m);
Rational max_abs_entry(const GaussianMatrix& m);

GaussianMatrix to_gaussian(const RationalMatrix& m);

/// Kronecker product a (x) b.
GaussianMatrix kron(const GaussianMatrix& a, const GaussianMatrix& b);

}  // namespace lctspin

#endif
