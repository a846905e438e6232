#include "hexaform/invariants/form_invariants.hpp"

#include "hexaform/algebra/normal_form.hpp"
#include "hexaform/errors.hpp"

#include <boost/integer/common_factor.hpp>

namespace hexaform::invariants {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

namespace {

void require_symmetric(const IntMatrix& g)
{
    if (!g.is_square() || !g.is_symmetric())
        throw UsageError("form invariants need a square symmetric matrix");
}

IntMatrix columns(const IntMatrix& m, std::size_t first, std::size_t count)
{
    return m.column_block(first, count);
}

} // namespace

ReducedForm reduce_form(const IntMatrix& g)
{
    require_symmetric(g);
    const std::size_t n = g.rows();
    ReducedForm out;
    out.radical = n ? algebra::integer_kernel_basis(g) : IntMatrix(0, 0);
    const std::size_t k = out.radical.cols();
    const IntMatrix full = algebra::unimodular_completion(out.radical);
    out.complement = columns(full, k, n - k);
    out.block = out.complement.transpose() * g * out.complement;
    return out;
}

std::pair<std::size_t, std::size_t> inertia(const IntMatrix& g)
{
    require_symmetric(g);
    IntMatrix a = g;
    std::size_t n = a.rows();
    std::size_t pos = 0, neg = 0;
    // Remaining active indices shrink as pivots are eliminated. The active
    // block equals `scale` times the true Schur complement, scale = ±1.
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i)
        active[i] = i;
    int scale = 1;
    while (!active.empty()) {
        std::size_t pivot = active.size();
        for (std::size_t i = 0; i < active.size(); ++i)
            if (a(active[i], active[i]) != 0) {
                pivot = i;
                break;
            }
        if (pivot == active.size()) {
            // Zero diagonal: a nonzero off-diagonal a_ij gives e_i + e_j a
            // diagonal of 2·a_ij.
            std::size_t pi = 0, pj = 0;
            bool found = false;
            for (std::size_t i = 0; i < active.size() && !found; ++i)
                for (std::size_t j = i + 1; j < active.size() && !found; ++j)
                    if (a(active[i], active[j]) != 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
            if (!found)
                break;
            a.add_row_multiple(active[pi], active[pj], 1);
            a.add_col_multiple(active[pi], active[pj], 1);
            pivot = pi;
        }
        const std::size_t k = active[pivot];
        const BigInt p = a(k, k);
        if ((p > 0) == (scale > 0))
            ++pos;
        else
            ++neg;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
        // Row ops row_i ← p·row_i − a_ik·row_k scale the Schur block by p.
        BigInt content = 0;
        std::vector<std::vector<BigInt>> next(active.size(), std::vector<BigInt>(active.size()));
        for (std::size_t i = 0; i < active.size(); ++i)
            for (std::size_t j = 0; j < active.size(); ++j) {
                next[i][j] = p * a(active[i], active[j]) - a(active[i], k) * a(k, active[j]);
                content = boost::integer::gcd(content, algebra::abs_value(next[i][j]));
            }
        if (p < 0)
            scale = -scale;
        for (std::size_t i = 0; i < active.size(); ++i)
            for (std::size_t j = 0; j < active.size(); ++j)
                a(active[i], active[j]) = content > 1 ? BigInt(next[i][j] / content) : next[i][j];
    }
    return {pos, neg};
}

FormInvariants form_invariants(const IntMatrix& g)
{
    const auto reduced = reduce_form(g);
    const auto& b = reduced.block;
    FormInvariants out;
    out.total_dim = g.rows();
    out.radical_dim = reduced.radical.cols();
    out.rank = b.rows();
    std::tie(out.positive, out.negative) = inertia(b);
    out.determinant = b.rows() ? algebra::determinant(b) : BigInt(1);
    out.parity = Parity::even;
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (b(i, i) % 2 != 0)
            out.parity = Parity::odd;
    if (b.rows())
        out.invariant_factors = algebra::smith_normal_form(b).invariant_factors();
    return out;
}

std::vector<std::string> field_names() { return {"dim", "radical", "rank", "signature", "det", "parity", "factors"}; }

std::vector<std::string> differing_fields(const FormInvariants& a, const FormInvariants& b)
{
    std::vector<std::string> out;
    if (a.total_dim != b.total_dim)
        out.push_back("dim");
    if (a.radical_dim != b.radical_dim)
        out.push_back("radical");
    if (a.rank != b.rank)
        out.push_back("rank");
    if (a.positive != b.positive || a.negative != b.negative)
        out.push_back("signature");
    if (a.determinant != b.determinant)
        out.push_back("det");
    if (a.parity != b.parity)
        out.push_back("parity");
    if (a.invariant_factors != b.invariant_factors)
        out.push_back("factors");
    return out;
}

bool same_nondegenerate_part(const FormInvariants& a, const FormInvariants& b)
{
    for (const auto& f : differing_fields(a, b))
        if (f != "dim" && f != "radical")
            return false;
    return true;
}

} // namespace hexaform::invariants
