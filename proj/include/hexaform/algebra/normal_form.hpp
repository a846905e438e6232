#pragma once

#include "hexaform/algebra/int_matrix.hpp"

#include <optional>
#include <vector>

namespace hexaform::algebra {

/// U·A·V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
/// `u_inverse` is U⁻¹, tracked alongside U so callers can extend lattices to
/// unimodular bases without a separate inversion.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    IntMatrix u_inverse;

    /// Diagonal entries d_1..d_min(rows, cols), zeros included.
    std::vector<BigInt> diagonal() const;
    /// Nonzero diagonal entries.
    std::vector<BigInt> invariant_factors() const;
    std::size_t rank() const;
};

/// Smallest-absolute-value pivoting with row/column gcd reduction.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Row Hermite normal form with zero rows dropped: pivots positive and
/// strictly increasing in column, entries above each pivot in [0, pivot).
/// The row span is preserved, so the result is the canonical basis of the
/// row lattice.
IntMatrix row_hermite_form(const IntMatrix& a);

/// Columns form a saturated ℤ-basis of {v : A·v = 0}, in canonical
/// (Hermite-reduced) form. May have zero columns.
IntMatrix integer_kernel_basis(const IntMatrix& a);

/// Rank over ℚ.
std::size_t rational_rank(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntMatrix& a);

/// Columns form a basis of (column span of A ⊗ ℚ) ∩ ℤ^rows.
IntMatrix saturation(const IntMatrix& a);

/// True when the column lattice of A is a direct summand of ℤ^rows and the
/// columns are independent: every invariant factor equals 1.
bool is_saturated_basis(const IntMatrix& a);

/// For a saturated basis K (n × k), a unimodular n × n matrix whose first k
/// columns span the same lattice as K.
IntMatrix unimodular_completion(const IntMatrix& k);

/// Integer coordinates c with B·c = v, if they exist. B must have
/// independent columns.
std::optional<std::vector<BigInt>> solve_in_lattice(const IntMatrix& b, const std::vector<BigInt>& v);

} // namespace hexaform::algebra
