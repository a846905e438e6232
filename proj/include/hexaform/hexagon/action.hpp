#pragma once

#include "hexaform/hexagon/constraints.hpp"

#include <functional>

namespace hexaform::hexagon {

/// The two factors of Φ_u: x+y on the face jklm and ξ+η on the face ijkl.
template <class V>
struct PhiFactors {
    V latin;
    V greek;
};

template <class V>
PhiFactors<V> phi_factors(const VariableLayout& layout, const Pentachoron& u, const std::vector<V>& latin,
                          const std::vector<V>& greek)
{
    const auto f = layout.face_indices(u);
    return {latin[layout.x(f[0])] + latin[layout.y(f[0])], greek[layout.x(f[4])] + greek[layout.y(f[4])]};
}

/// Φ_u = (x_jklm + y_jklm) ⊗ (ξ_ijkl + η_ijkl), the tensor product supplied
/// as `product`.
template <class V, class Product>
auto phi(const VariableLayout& layout, const Pentachoron& u, const std::vector<V>& latin,
         const std::vector<V>& greek, Product product)
{
    const auto [a, b] = phi_factors(layout, u, latin, greek);
    return product(a, b);
}

template <class V>
V phi(const VariableLayout& layout, const Pentachoron& u, const std::vector<V>& latin, const std::vector<V>& greek)
{
    return phi(layout, u, latin, greek, [](const V& a, const V& b) { return a * b; });
}

/// Φ_u through the R-eliminated form
/// (x_jklm − 2x_iklm + x_ijlm + x_ijkm − 2x_ijkl)(ξ_iklm − ξ_ijlm + ξ_ijkl),
/// reading only the x and ξ coordinates.
algebra::BigInt phi_second_line(const VariableLayout& layout, const Pentachoron& u,
                                const std::vector<algebra::BigInt>& latin, const std::vector<algebra::BigInt>& greek);
algebra::GFElem phi_second_line(const VariableLayout& layout, const Pentachoron& u,
                                const std::vector<algebra::GFElem>& latin, const std::vector<algebra::GFElem>& greek);

/// S = Σ_u ε_u Φ_u. OrientationError when t carries no signs.
template <class V, class Product, class Result>
Result action_value(const Triangulation& t, const VariableLayout& layout, const std::vector<V>& latin,
                    const std::vector<V>& greek, Product product, Result zero)
{
    const auto& signs = t.require_signs();
    Result total = std::move(zero);
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto term = phi(layout, t.pentachora()[i], latin, greek, product);
        if (signs[i] > 0)
            total = total + term;
        else
            total = total - term;
    }
    return total;
}

algebra::BigInt action_value(const Triangulation& t, const VariableLayout& layout,
                             const std::vector<algebra::BigInt>& latin, const std::vector<algebra::BigInt>& greek);
algebra::GFElem action_value(const Triangulation& t, const VariableLayout& layout,
                             const std::vector<algebra::GFElem>& latin, const std::vector<algebra::GFElem>& greek);

/// Per-pentachoron linear parts of S on a basis: L(u, a) = (x+y)_jklm of
/// basis vector a, M(u, b) = (ξ+η)_ijkl. S(v, w) = Σ ε_u L(u,·)v M(u,·)w.
struct ActionFactors {
    algebra::IntMatrix latin;
    algebra::IntMatrix greek;
};
ActionFactors action_factors(const Triangulation& t, const IntegerPermittedSpace& space);

/// G[a][b] = S(basis_a, basis_b).
algebra::IntMatrix gram_matrix(const Triangulation& t, const IntegerPermittedSpace& space);
algebra::IntMatrix gram_matrix(const Triangulation& t);
/// Over GF, entries as codes, row-major d × d.
std::vector<std::vector<algebra::GaloisField::Code>> gram_matrix(const Triangulation& t,
                                                                   const FieldPermittedSpace& space);

/// Lift a field-space basis vector to element form.
std::vector<algebra::GFElem> to_elements(const algebra::Field& f, const std::vector<algebra::GaloisField::Code>& v);

} // namespace hexaform::hexagon
