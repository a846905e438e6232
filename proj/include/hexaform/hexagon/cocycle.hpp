#pragma once

#include "hexaform/hexagon/action.hpp"

#include <string>

namespace hexaform::hexagon {

/// Antisymmetric part of Φ_u on one pentachoron and its two coboundary
/// expansions over the faces t_0..t_4 of u:
///   lhs    = Φ(x, ξ) − Φ(ξ, x)
///   first  = −Σ_i (−1)^i (x_i + y_i) η_i
///   second = Σ_i (−1)^i y_i (ξ_i + η_i)
/// For permitted colorings lhs = first = second.
struct SymmetryIdentity {
    algebra::GFElem lhs;
    algebra::GFElem first;
    algebra::GFElem second;
};
SymmetryIdentity symmetry_identity(const VariableLayout& layout, const Pentachoron& u,
                                   const std::vector<algebra::GFElem>& latin,
                                   const std::vector<algebra::GFElem>& greek);

/// Coboundary terms collected per tetrahedron (layout order): each
/// pentachoron u adds ε_u times its `first` summand to each of its faces.
/// The sum of all entries is S(x, ξ) − S(ξ, x); on a closed coherently
/// oriented complex every entry vanishes.
std::vector<algebra::GFElem> symmetry_defect(const Triangulation& t, const VariableLayout& layout,
                                             const std::vector<algebra::GFElem>& latin,
                                             const std::vector<algebra::GFElem>& greek);

struct CocycleReport {
    std::string ring;
    std::size_t dimension = 0;
    bool holds = false;
};

/// Evaluates Σ_i (−1)^i Φ on the facets of ∂Δ⁵ for every pair of basis
/// vectors of its permitted space, over ℤ (field == nullptr) or a field.
/// Equivalent to the Gram matrix of ∂Δ⁵ vanishing.
CocycleReport verify_cocycle(const algebra::Field& field, const RMatrix& r = kRMatrix);

} // namespace hexaform::hexagon
