#include "hexaform/algebra/normal_form.hpp"

#include "hexaform/errors.hpp"

#include <algorithm>

namespace hexaform::algebra {

std::vector<BigInt> SmithDecomposition::diagonal() const
{
    std::vector<BigInt> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(d(i, i));
    return out;
}

std::vector<BigInt> SmithDecomposition::invariant_factors() const
{
    std::vector<BigInt> out;
    for (auto& x : diagonal())
        if (x != 0)
            out.push_back(x);
    return out;
}

std::size_t SmithDecomposition::rank() const { return invariant_factors().size(); }

namespace {

// Location of the smallest nonzero |entry| in the lower-right block starting at t.
bool find_min_pivot(const IntMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc)
{
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const BigInt& x = m(i, j);
            if (x == 0)
                continue;
            BigInt ax = abs_value(x);
            if (!found || ax < best) {
                best = std::move(ax);
                pr = i;
                pc = j;
                found = true;
                if (best == 1)
                    return true;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithDecomposition s{IntMatrix::identity(m), a, IntMatrix::identity(n), IntMatrix::identity(m)};
    IntMatrix& d = s.d;

    // Row operations act on U from the left and on U⁻¹ from the right by the
    // inverse elementary matrix.
    auto row_swap = [&](std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        s.u.swap_rows(i, j);
        s.u_inverse.swap_cols(i, j);
    };
    auto row_add = [&](std::size_t target, std::size_t source, const BigInt& f) {
        d.add_row_multiple(target, source, f);
        s.u.add_row_multiple(target, source, f);
        s.u_inverse.add_col_multiple(source, target, -f);
    };
    auto row_negate = [&](std::size_t i) {
        d.negate_row(i);
        s.u.negate_row(i);
        s.u_inverse.negate_col(i);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        s.v.swap_cols(i, j);
    };
    auto col_add = [&](std::size_t target, std::size_t source, const BigInt& f) {
        d.add_col_multiple(target, source, f);
        s.v.add_col_multiple(target, source, f);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pr = t, pc = t;
        if (!find_min_pivot(d, t, pr, pc))
            break;
        for (;;) {
            row_swap(t, pr);
            col_swap(t, pc);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                BigInt q = d(i, t) / d(t, t);
                row_add(i, t, -q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                BigInt q = d(t, j) / d(t, t);
                col_add(j, t, -q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                find_min_pivot(d, t, pr, pc);
                continue;
            }
            // Divisibility: fold an offending row into row t and go again.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        row_add(t, i, BigInt(1));
                        divides = false;
                        break;
                    }
            if (divides)
                break;
            find_min_pivot(d, t, pr, pc);
        }
        if (d(t, t) < 0)
            row_negate(t);
    }
    return s;
}

IntMatrix row_hermite_form(const IntMatrix& a)
{
    IntMatrix h = a;
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        bool pivot = false;
        for (;;) {
            std::size_t best = m;
            BigInt best_abs;
            for (std::size_t i = row; i < m; ++i) {
                if (h(i, col) == 0)
                    continue;
                BigInt ax = abs_value(h(i, col));
                if (best == m || ax < best_abs) {
                    best = i;
                    best_abs = std::move(ax);
                }
            }
            if (best == m)
                break;
            h.swap_rows(row, best);
            bool clean = true;
            for (std::size_t i = row + 1; i < m; ++i) {
                if (h(i, col) == 0)
                    continue;
                h.add_row_multiple(i, row, -floor_div(h(i, col), h(row, col)));
                if (h(i, col) != 0)
                    clean = false;
            }
            if (clean) {
                pivot = true;
                break;
            }
        }
        if (!pivot)
            continue;
        if (h(row, col) < 0)
            h.negate_row(row);
        for (std::size_t i = 0; i < row; ++i)
            if (h(i, col) != 0)
                h.add_row_multiple(i, row, -floor_div(h(i, col), h(row, col)));
        ++row;
    }
    std::vector<std::size_t> keep(row);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < row; ++i)
        keep[i] = i;
    for (std::size_t j = 0; j < n; ++j)
        all[j] = j;
    return h.submatrix(keep, all);
}

namespace {

std::vector<std::size_t> pivot_columns(const IntMatrix& echelon)
{
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < echelon.rows(); ++r)
        for (std::size_t c = 0; c < echelon.cols(); ++c)
            if (echelon(r, c) != 0) {
                pivots.push_back(c);
                break;
            }
    return pivots;
}

// Kernel of an echelon matrix by unimodular column operations; the trailing
// columns of the accumulated transform span the kernel.
std::vector<std::vector<BigInt>> kernel_by_column_ops(IntMatrix w)
{
    const std::size_t n = w.cols();
    IntMatrix v = IntMatrix::identity(n);
    std::size_t pos = 0;
    for (std::size_t r = 0; r < w.rows() && pos < n; ++r) {
        for (;;) {
            std::size_t best = n;
            BigInt best_abs;
            for (std::size_t c = pos; c < n; ++c) {
                if (w(r, c) == 0)
                    continue;
                BigInt ax = abs_value(w(r, c));
                if (best == n || ax < best_abs) {
                    best = c;
                    best_abs = std::move(ax);
                }
            }
            if (best == n)
                break;
            w.swap_cols(pos, best);
            v.swap_cols(pos, best);
            bool clean = true;
            for (std::size_t c = pos + 1; c < n; ++c) {
                if (w(r, c) == 0)
                    continue;
                BigInt q = w(r, c) / w(r, pos);
                w.add_col_multiple(c, pos, -q);
                v.add_col_multiple(c, pos, -q);
                if (w(r, c) != 0)
                    clean = false;
            }
            if (clean) {
                ++pos;
                break;
            }
        }
    }
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t c = pos; c < n; ++c)
        basis.push_back(v.column(c));
    return basis;
}

} // namespace

IntMatrix integer_kernel_basis(const IntMatrix& a)
{
    const std::size_t n = a.cols();
    if (a.rows() == 0)
        return IntMatrix::identity(n);

    IntMatrix e = row_hermite_form(a);
    const auto pivots = pivot_columns(e);
    bool unit_pivots = true;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (e(r, pivots[r]) != 1)
            unit_pivots = false;

    std::vector<std::vector<BigInt>> basis;
    if (unit_pivots) {
        // Reduced echelon form with unit pivots: parametrize by free columns.
        std::vector<bool> is_pivot(n, false);
        for (auto p : pivots)
            is_pivot[p] = true;
        for (std::size_t f = 0; f < n; ++f) {
            if (is_pivot[f])
                continue;
            std::vector<BigInt> v(n);
            v[f] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -e(r, f);
            basis.push_back(std::move(v));
        }
    } else {
        basis = kernel_by_column_ops(std::move(e));
    }
    if (basis.empty())
        return IntMatrix(n, 0);

    IntMatrix rows(basis.size(), n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows(i, j) = basis[i][j];
    return row_hermite_form(rows).transpose();
}

std::size_t rational_rank(const IntMatrix& a)
{
    if (a.empty())
        return 0;
    return row_hermite_form(a).rows();
}

BigInt determinant(const IntMatrix& a)
{
    if (!a.is_square())
        throw UsageError("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntMatrix saturation(const IntMatrix& a)
{
    const std::size_t n = a.rows();
    IntMatrix annihilator = integer_kernel_basis(a.transpose());
    if (annihilator.cols() == 0)
        return IntMatrix::identity(n);
    return integer_kernel_basis(annihilator.transpose());
}

bool is_saturated_basis(const IntMatrix& a)
{
    if (a.cols() == 0)
        return true;
    if (a.cols() > a.rows())
        return false;
    const auto diag = smith_normal_form(a).diagonal();
    return std::all_of(diag.begin(), diag.end(), [](const BigInt& x) { return x == 1; });
}

IntMatrix unimodular_completion(const IntMatrix& k)
{
    const std::size_t n = k.rows();
    if (k.cols() == 0)
        return IntMatrix::identity(n);
    if (!is_saturated_basis(k))
        throw UsageError("unimodular_completion: basis is not saturated");
    return smith_normal_form(k).u_inverse;
}

std::optional<std::vector<BigInt>> solve_in_lattice(const IntMatrix& b, const std::vector<BigInt>& v)
{
    if (v.size() != b.rows())
        throw UsageError("solve_in_lattice: vector length mismatch");
    const std::size_t k = b.cols();
    if (k == 0) {
        for (const auto& x : v)
            if (x != 0)
                return std::nullopt;
        return std::vector<BigInt>{};
    }
    const auto s = smith_normal_form(b);
    const auto uv = s.u.apply(v);
    std::vector<BigInt> w(k);
    for (std::size_t i = 0; i < uv.size(); ++i) {
        const BigInt di = i < k ? s.d(i, i) : BigInt(0);
        if (di == 0) {
            if (uv[i] != 0)
                return std::nullopt;
            if (i < k)
                throw UsageError("solve_in_lattice: basis columns are dependent");
            continue;
        }
        if (uv[i] % di != 0)
            return std::nullopt;
        w[i] = uv[i] / di;
    }
    return s.v.apply(w);
}

} // namespace hexaform::algebra
