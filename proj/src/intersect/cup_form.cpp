#include "hexaform/intersect/cup_form.hpp"

#include "hexaform/algebra/gf_linalg.hpp"
#include "hexaform/algebra/normal_form.hpp"
#include "hexaform/errors.hpp"

namespace hexaform::intersect {

using algebra::BigInt;

TriangleLayout::TriangleLayout(const Triangulation& t) : triangles_(t.triangles())
{
    for (std::size_t i = 0; i < triangles_.size(); ++i)
        index_.emplace(triangles_[i], i);
}

std::size_t TriangleLayout::index_of(const Triangle& s) const
{
    const auto it = index_.find(s);
    if (it == index_.end())
        throw UsageError("triangle is not in the layout");
    return it->second;
}

IntMatrix cocycle_conditions(const Triangulation& t, const TriangleLayout& layout)
{
    const auto tets = t.tetrahedra();
    IntMatrix m(tets.size(), layout.size());
    for (std::size_t r = 0; r < tets.size(); ++r) {
        // faces(ijkl) = jkl, ikl, ijl, ijk; the row is −Σ_k (−1)^k x_face_k.
        const auto fs = complex::faces(tets[r]);
        for (std::size_t k = 0; k < 4; ++k)
            m(r, layout.index_of(fs[k])) = k % 2 ? 1 : -1;
    }
    return m;
}

TwoCocycleSpace solve_2cocycles(const Triangulation& t)
{
    TriangleLayout layout(t);
    auto basis = algebra::integer_kernel_basis(cocycle_conditions(t, layout));
    return {std::move(layout), std::move(basis)};
}

std::size_t cocycle_dimension(const Triangulation& t, const algebra::Field& field)
{
    const TriangleLayout layout(t);
    const auto m = cocycle_conditions(t, layout);
    algebra::CodeMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c(i, j) = field->from_integer(static_cast<long long>(m(i, j)));
    return m.cols() - algebra::rank(*field, c);
}

IntMatrix coboundary_matrix(const Triangulation& t, const TriangleLayout& layout)
{
    const auto edges = t.edges();
    std::map<std::pair<complex::VertexId, complex::VertexId>, std::size_t> edge_index;
    for (std::size_t e = 0; e < edges.size(); ++e)
        edge_index.emplace(edges[e], e);
    IntMatrix m(layout.size(), edges.size());
    for (std::size_t r = 0; r < layout.size(); ++r) {
        const auto& s = layout.triangles()[r];
        m(r, edge_index.at({s[1], s[2]})) += 1;
        m(r, edge_index.at({s[0], s[2]})) -= 1;
        m(r, edge_index.at({s[0], s[1]})) += 1;
    }
    return m;
}

IntMatrix cup_gram(const Triangulation& t, const TwoCocycleSpace& space)
{
    const auto& signs = t.require_signs();
    const std::size_t d = space.dim();
    IntMatrix g(d, d);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& u = t.pentachora()[i];
        const auto front = space.layout.index_of(Triangle{{u[0], u[1], u[2]}});
        const auto back = space.layout.index_of(Triangle{{u[2], u[3], u[4]}});
        for (std::size_t a = 0; a < d; ++a) {
            const BigInt& x = space.basis(front, a);
            if (x == 0)
                continue;
            for (std::size_t b = 0; b < d; ++b) {
                const BigInt& xi = space.basis(back, b);
                if (xi == 0)
                    continue;
                if (signs[i] > 0)
                    g(a, b) += x * xi;
                else
                    g(a, b) -= x * xi;
            }
        }
    }
    return g;
}

IntMatrix cup_gram(const Triangulation& t) { return cup_gram(t, solve_2cocycles(t)); }

CohomologyForm quotient_cup_form(const Triangulation& t)
{
    const auto space = solve_2cocycles(t);
    const auto delta = coboundary_matrix(t, space.layout);
    const std::size_t z = space.dim();

    // Coordinates of each coboundary generator in the cocycle basis.
    std::vector<std::vector<BigInt>> coords;
    for (std::size_t e = 0; e < delta.cols(); ++e) {
        auto c = algebra::solve_in_lattice(space.basis, delta.column(e));
        if (!c)
            throw Error("coboundary is not an integral combination of the cocycle basis");
        coords.push_back(std::move(*c));
    }
    IntMatrix b = coords.empty() ? IntMatrix(z, 0) : IntMatrix::from_columns(z, coords);
    const IntMatrix sat = algebra::saturation(b);
    const IntMatrix full = algebra::unimodular_completion(sat);

    CohomologyForm out;
    out.cocycle_dim = z;
    out.coboundary_rank = sat.cols();
    out.complement = full.column_block(sat.cols(), z - sat.cols());
    out.gram = out.complement.transpose() * cup_gram(t, space) * out.complement;
    return out;
}

} // namespace hexaform::intersect
