#pragma once

#include "hexaform/algebra/galois_field.hpp"
#include "hexaform/algebra/int_matrix.hpp"
#include "hexaform/complex/triangulation.hpp"

#include <array>
#include <map>
#include <vector>

namespace hexaform::hexagon {

using complex::Pentachoron;
using complex::Tetrahedron;
using complex::Triangulation;

using RMatrix = std::array<std::array<int, 5>, 5>;

/// y_u = R·x_u, faces in the order jklm, iklm, ijlm, ijkm, ijkl.
inline constexpr RMatrix kRMatrix = {{
    {0, -2, 1, 1, -2},
    {0, -1, 0, 1, -1},
    {-1, 2, -2, 0, 1},
    {-1, 3, -2, -1, 2},
    {0, 1, -1, 0, 0},
}};

algebra::IntMatrix r_matrix(const RMatrix& r = kRMatrix);

/// Coordinates of a coloring: tetrahedra sorted lexicographically, all x_t
/// first, then all y_t.
class VariableLayout {
public:
    VariableLayout() = default;
    explicit VariableLayout(const Triangulation& t);

    const std::vector<Tetrahedron>& tetrahedra() const noexcept { return tetrahedra_; }
    std::size_t tetrahedron_count() const noexcept { return tetrahedra_.size(); }
    std::size_t variable_count() const noexcept { return 2 * tetrahedra_.size(); }
    std::size_t index_of(const Tetrahedron& t) const;
    std::size_t x(std::size_t tet) const noexcept { return tet; }
    std::size_t y(std::size_t tet) const noexcept { return tetrahedra_.size() + tet; }
    /// Tetrahedron indices of faces(u).
    std::array<std::size_t, 5> face_indices(const Pentachoron& u) const;

private:
    std::vector<Tetrahedron> tetrahedra_;
    std::map<Tetrahedron, std::size_t> index_;
};

/// One row per pentachoron and face k:  y_{face_k} − Σ_j R_kj·x_{face_j} = 0.
struct ConstraintSystem {
    VariableLayout layout;
    algebra::IntMatrix matrix;
    std::size_t equation_count() const noexcept { return matrix.rows(); }
    std::size_t variable_count() const noexcept { return matrix.cols(); }
};

ConstraintSystem build_constraints(const Triangulation& t, const RMatrix& r = kRMatrix);

/// Saturated ℤ-basis of the permitted colorings, one column per generator.
struct IntegerPermittedSpace {
    VariableLayout layout;
    algebra::IntMatrix basis;
    std::size_t dim() const noexcept { return basis.cols(); }
    std::vector<algebra::BigInt> vector(std::size_t a) const { return basis.column(a); }
};

/// Basis of the permitted colorings over a finite field, as code vectors.
struct FieldPermittedSpace {
    VariableLayout layout;
    algebra::Field field;
    std::vector<std::vector<algebra::GaloisField::Code>> basis;
    std::size_t dim() const noexcept { return basis.size(); }
};

IntegerPermittedSpace solve_permitted(const ConstraintSystem& c);
FieldPermittedSpace solve_permitted(const ConstraintSystem& c, const algebra::Field& field);

/// Every equation holds for the coloring.
bool is_permitted(const ConstraintSystem& c, const std::vector<algebra::BigInt>& coloring);
bool is_permitted(const ConstraintSystem& c, const algebra::GaloisField& f,
                  const std::vector<algebra::GaloisField::Code>& coloring);

} // namespace hexaform::hexagon
