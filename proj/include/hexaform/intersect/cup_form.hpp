#pragma once

#include "hexaform/algebra/galois_field.hpp"
#include "hexaform/algebra/int_matrix.hpp"
#include "hexaform/complex/triangulation.hpp"

#include <map>
#include <vector>

namespace hexaform::intersect {

using algebra::IntMatrix;
using complex::Triangle;
using complex::Triangulation;

/// Triangles of a complex, sorted, with their positions.
class TriangleLayout {
public:
    TriangleLayout() = default;
    explicit TriangleLayout(const Triangulation& t);

    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
    std::size_t size() const noexcept { return triangles_.size(); }
    std::size_t index_of(const Triangle& s) const;

private:
    std::vector<Triangle> triangles_;
    std::map<Triangle, std::size_t> index_;
};

/// One row per tetrahedron ijkl:  x_ijk − x_ijl + x_ikl − x_jkl.
IntMatrix cocycle_conditions(const Triangulation& t, const TriangleLayout& layout);

/// Saturated ℤ-basis (columns) of the 2-cocycles x_ijk.
struct TwoCocycleSpace {
    TriangleLayout layout;
    IntMatrix basis;
    std::size_t dim() const noexcept { return basis.cols(); }
};

TwoCocycleSpace solve_2cocycles(const Triangulation& t);

/// Dimension of the 2-cocycle space over GF(p^n).
std::size_t cocycle_dimension(const Triangulation& t, const algebra::Field& field);

/// (δa)_ijk = a_jk − a_ik + a_ij, one column per edge (edges sorted).
IntMatrix coboundary_matrix(const Triangulation& t, const TriangleLayout& layout);

/// G[a][b] = Σ_u ε_u x^a_ijk x^b_klm over u = ijklm. OrientationError when t
/// carries no signs.
IntMatrix cup_gram(const Triangulation& t, const TwoCocycleSpace& space);
IntMatrix cup_gram(const Triangulation& t);

/// Cup form on Z²/B² (torsion-free part): coboundaries expressed in the
/// cocycle basis, saturated, and split off by a unimodular completion.
struct CohomologyForm {
    std::size_t cocycle_dim = 0;
    std::size_t coboundary_rank = 0;
    /// Columns: cocycle-basis coordinates of the complement to B².
    IntMatrix complement;
    IntMatrix gram;
};
CohomologyForm quotient_cup_form(const Triangulation& t);

} // namespace hexaform::intersect
