#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "toricdef/rational.hpp"

namespace toricdef {

// Dense rectangular matrix. Zero-by-n shapes are allowed so that empty
// map blocks (e.g. a trivial syzygy module) evaluate uniformly.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix p(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
            }
        return p;
    }

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// S = U * A * V with U, V unimodular and the diagonal of S the
// non-negative elementary divisors d1 | d2 | ...
struct SNFDecomposition {
    IntMatrix u, s, v;
    std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
};

SNFDecomposition smith_normal_form(const IntMatrix& a);

// Exact determinant (fraction-free expansion by elimination).
Int int_det(const IntMatrix& a);

std::size_t rat_rank(const RatMatrix& a);

// Basis of { v : A v = 0 }, one vector per free column.
std::vector<std::vector<Rat>> rat_kernel(const RatMatrix& a);

RatMatrix to_rat(const IntMatrix& a);

}  // namespace toricdef
