#include "hexaform/hexagon/constraints.hpp"

#include "hexaform/algebra/gf_linalg.hpp"
#include "hexaform/algebra/normal_form.hpp"
#include "hexaform/errors.hpp"

namespace hexaform::hexagon {

using algebra::BigInt;
using algebra::GaloisField;
using algebra::IntMatrix;

IntMatrix r_matrix(const RMatrix& r)
{
    IntMatrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            m(i, j) = r[i][j];
    return m;
}

VariableLayout::VariableLayout(const Triangulation& t) : tetrahedra_(t.tetrahedra())
{
    for (std::size_t i = 0; i < tetrahedra_.size(); ++i)
        index_.emplace(tetrahedra_[i], i);
}

std::size_t VariableLayout::index_of(const Tetrahedron& t) const
{
    const auto it = index_.find(t);
    if (it == index_.end())
        throw UsageError("tetrahedron " + complex::to_string(t) + " is not in the layout");
    return it->second;
}

std::array<std::size_t, 5> VariableLayout::face_indices(const Pentachoron& u) const
{
    const auto fs = complex::faces(u);
    std::array<std::size_t, 5> out{};
    for (std::size_t k = 0; k < 5; ++k)
        out[k] = index_of(fs[k]);
    return out;
}

ConstraintSystem build_constraints(const Triangulation& t, const RMatrix& r)
{
    ConstraintSystem c{VariableLayout(t), {}};
    c.matrix = IntMatrix(5 * t.size(), c.layout.variable_count());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto f = c.layout.face_indices(t.pentachora()[i]);
        for (std::size_t k = 0; k < 5; ++k) {
            const std::size_t row = 5 * i + k;
            c.matrix(row, c.layout.y(f[k])) += 1;
            for (std::size_t j = 0; j < 5; ++j)
                c.matrix(row, c.layout.x(f[j])) -= r[k][j];
        }
    }
    return c;
}

IntegerPermittedSpace solve_permitted(const ConstraintSystem& c)
{
    return {c.layout, algebra::integer_kernel_basis(c.matrix)};
}

namespace {

algebra::CodeMatrix reduce(const ConstraintSystem& c, const GaloisField& f)
{
    algebra::CodeMatrix m(c.matrix.rows(), c.matrix.cols());
    const BigInt p = f.characteristic();
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            m(i, j) = static_cast<GaloisField::Code>(algebra::mod_floor(c.matrix(i, j), p));
    return m;
}

} // namespace

FieldPermittedSpace solve_permitted(const ConstraintSystem& c, const algebra::Field& field)
{
    return {c.layout, field, algebra::nullspace(*field, reduce(c, *field))};
}

bool is_permitted(const ConstraintSystem& c, const std::vector<BigInt>& coloring)
{
    if (coloring.size() != c.variable_count())
        return false;
    for (const auto& v : c.matrix.apply(coloring))
        if (v != 0)
            return false;
    return true;
}

bool is_permitted(const ConstraintSystem& c, const GaloisField& f, const std::vector<GaloisField::Code>& coloring)
{
    if (coloring.size() != c.variable_count())
        return false;
    const auto m = reduce(c, f);
    for (std::size_t i = 0; i < m.rows; ++i) {
        GaloisField::Code acc = 0;
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m(i, j))
                acc = f.add(acc, f.mul(m(i, j), coloring[j]));
        if (acc)
            return false;
    }
    return true;
}

} // namespace hexaform::hexagon
