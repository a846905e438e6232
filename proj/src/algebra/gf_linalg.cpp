#include "hexaform/algebra/gf_linalg.hpp"

#include "hexaform/errors.hpp"

namespace hexaform::algebra {

std::vector<std::size_t> rref(const GaloisField& f, CodeMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pr = row;
        while (pr < m.rows && m(pr, col) == 0)
            ++pr;
        if (pr == m.rows)
            continue;
        if (pr != row)
            for (std::size_t c = 0; c < m.cols; ++c)
                std::swap(m(pr, c), m(row, c));
        const auto inv = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols; ++c)
            m(row, c) = f.mul(m(row, c), inv);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            const auto factor = m(r, col);
            for (std::size_t c = col; c < m.cols; ++c)
                if (m(row, c) != 0)
                    m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<GaloisField::Code>> nullspace(const GaloisField& f, CodeMatrix m)
{
    const auto pivots = rref(f, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<GaloisField::Code>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<GaloisField::Code> v(m.cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const GaloisField& f, CodeMatrix m) { return rref(f, m).size(); }

namespace {

CodeMatrix to_codes(const Field& field, const std::vector<GFVector>& rows, std::size_t cols)
{
    if (!field)
        throw UsageError("gf_nullspace: null field");
    CodeMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw UsageError("gf_nullspace: ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& e = rows[r][c];
            if (!e.field() || (e.field() != field && !e.field()->same_as(*field)))
                throw UsageError("gf_nullspace: entry from a different field");
            m(r, c) = e.code();
        }
    }
    return m;
}

} // namespace

std::vector<GFVector> gf_nullspace(const Field& field, const std::vector<GFVector>& rows, std::size_t cols)
{
    auto basis = nullspace(*field, to_codes(field, rows, cols));
    std::vector<GFVector> out;
    out.reserve(basis.size());
    for (auto& v : basis) {
        GFVector g;
        g.reserve(v.size());
        for (auto c : v)
            g.emplace_back(field, c);
        out.push_back(std::move(g));
    }
    return out;
}

std::size_t gf_rank(const Field& field, const std::vector<GFVector>& rows, std::size_t cols)
{
    return rank(*field, to_codes(field, rows, cols));
}

std::vector<std::vector<GaloisField::Code>> complement_basis(
    const GaloisField& f, const std::vector<std::vector<GaloisField::Code>>& subspace, std::size_t cols)
{
    CodeMatrix m(subspace.size(), cols);
    for (std::size_t r = 0; r < subspace.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = subspace[r][c];
    const auto pivots = rref(f, m);
    if (pivots.size() != subspace.size())
        throw UsageError("complement_basis: subspace vectors are dependent");
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<GaloisField::Code>> out;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            std::vector<GaloisField::Code> e(cols, 0);
            e[c] = 1;
            out.push_back(std::move(e));
        }
    return out;
}

} // namespace hexaform::algebra
