#include "hexaform/algebra/int_matrix.hpp"

#include "hexaform/errors.hpp"

#include <sstream>
#include <utility>

namespace hexaform::algebra {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw UsageError("IntMatrix: ragged initializer");
        for (long long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<BigInt>>& columns)
{
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw UsageError("IntMatrix::from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const
{
    std::vector<BigInt> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

std::vector<BigInt> IntMatrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const
{
    IntMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c)
            out(r, c) = (*this)(r, first + c);
    return out;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const
{
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = (*this)(rows[i], cols[j]);
    return out;
}

bool IntMatrix::is_zero() const
{
    for (const auto& v : data_)
        if (v != 0)
            return false;
    return true;
}

bool IntMatrix::is_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r))
                return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor)
{
    if (factor == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const BigInt& s = (*this)(source, c);
        if (s != 0)
            (*this)(target, c) += factor * s;
    }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor)
{
    if (factor == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const BigInt& s = (*this)(r, source);
        if (s != 0)
            (*this)(r, target) += factor * s;
    }
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw UsageError("IntMatrix: dimension mismatch in product");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0)
                    out(i, j) += aik * b(k, j);
        }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw UsageError("IntMatrix: dimension mismatch in sum");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] += b.data_[i];
    return out;
}

IntMatrix operator-(const IntMatrix& a)
{
    IntMatrix out = a;
    for (auto& v : out.data_)
        v = -v;
    return out;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const
{
    if (v.size() != cols_)
        throw UsageError("IntMatrix::apply: vector length mismatch");
    std::vector<BigInt> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0 && v[c] != 0)
                out[r] += (*this)(r, c) * v[c];
    return out;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            os << ',';
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c)
                os << ',';
            os << (*this)(r, c);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace hexaform::algebra
