#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "curvelat/rational.hpp"

namespace curvelat {

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<BigInt>;

/// Integer matrix stored by rows; only nonzero entries are kept.
class SparseIntMatrix {
public:
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    void add(std::size_t i, std::size_t j, const BigInt& value);
    const std::map<std::size_t, BigInt>& row(std::size_t i) const { return data_[i]; }

    static SparseIntMatrix from_dense(const IntMatrix& m);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::map<std::size_t, BigInt>> data_;
};

struct SNFResult {
    std::vector<BigInt> divisors;  // d_1 | d_2 | ... , all positive
    std::size_t rank = 0;
};

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_rational(const RatMatrix& m);

/// Exact rank of an integer matrix by Bareiss elimination.
std::size_t rank_integer(const IntMatrix& m);

/// Smith normal form divisors by elementary row and column operations,
/// pivoting on an entry of smallest absolute value.
SNFResult smith_normal_form(const IntMatrix& m);
SNFResult smith_normal_form(const SparseIntMatrix& m);

}  // namespace curvelat
