#include "hexaform/hexagon/cocycle.hpp"

#include "hexaform/complex/builtin.hpp"

namespace hexaform::hexagon {

using algebra::GFElem;

SymmetryIdentity symmetry_identity(const VariableLayout& layout, const Pentachoron& u,
                                   const std::vector<GFElem>& latin, const std::vector<GFElem>& greek)
{
    const auto& field = latin.front().field();
    const auto f = layout.face_indices(u);
    SymmetryIdentity out{phi(layout, u, latin, greek) - phi(layout, u, greek, latin), GFElem::zero(field),
                         GFElem::zero(field)};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& x = latin[layout.x(f[i])];
        const auto& y = latin[layout.y(f[i])];
        const auto& xi = greek[layout.x(f[i])];
        const auto& eta = greek[layout.y(f[i])];
        const auto a = (x + y) * eta;
        const auto b = y * (xi + eta);
        if (i % 2) {
            out.first += a;
            out.second -= b;
        } else {
            out.first -= a;
            out.second += b;
        }
    }
    return out;
}

std::vector<GFElem> symmetry_defect(const Triangulation& t, const VariableLayout& layout,
                                    const std::vector<GFElem>& latin, const std::vector<GFElem>& greek)
{
    const auto& signs = t.require_signs();
    const auto& field = latin.front().field();
    std::vector<GFElem> out(layout.tetrahedron_count(), GFElem::zero(field));
    for (std::size_t u = 0; u < t.size(); ++u) {
        const auto f = layout.face_indices(t.pentachora()[u]);
        for (std::size_t i = 0; i < 5; ++i) {
            auto term = (latin[layout.x(f[i])] + latin[layout.y(f[i])]) * greek[layout.y(f[i])];
            // −ε_u (−1)^i
            if ((signs[u] > 0) == (i % 2 == 0))
                term = -term;
            out[f[i]] += term;
        }
    }
    return out;
}

CocycleReport verify_cocycle(const algebra::Field& field, const RMatrix& r)
{
    const auto s4 = complex::boundary_delta5();
    const auto c = build_constraints(s4, r);
    CocycleReport report;
    if (!field) {
        const auto space = solve_permitted(c);
        const auto g = gram_matrix(s4, space);
        report.ring = "Z";
        report.dimension = space.dim();
        report.holds = g.is_zero();
        return report;
    }
    const auto space = solve_permitted(c, field);
    const auto g = gram_matrix(s4, space);
    report.ring = "GF(" + std::to_string(field->order()) + ")";
    report.dimension = space.dim();
    report.holds = true;
    for (const auto& row : g)
        for (auto v : row)
            if (v)
                report.holds = false;
    return report;
}

} // namespace hexaform::hexagon
