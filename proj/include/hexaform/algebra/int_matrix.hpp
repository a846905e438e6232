#pragma once

#include "hexaform/algebra/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hexaform::algebra {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    /// Matrix whose columns are the given vectors (all of equal length `rows`).
    static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<BigInt>>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<BigInt> column(std::size_t c) const;
    std::vector<BigInt> row(std::size_t r) const;
    IntMatrix transpose() const;
    /// Columns [first, first + count).
    IntMatrix column_block(std::size_t first, std::size_t count) const;
    IntMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    bool is_zero() const;
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_symmetric() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor);
    /// col[target] += factor * col[source]
    void add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

} // namespace hexaform::algebra
