#pragma once

#include "hexaform/algebra/int_matrix.hpp"

#include <string>
#include <vector>

namespace hexaform::invariants {

using algebra::BigInt;
using algebra::IntMatrix;

enum class Parity { even, odd };
std::string to_string(Parity p);

/// Congruence invariants of a symmetric integral form, taken modulo its
/// radical.
struct FormInvariants {
    std::size_t total_dim = 0;
    std::size_t radical_dim = 0;
    std::size_t rank = 0;
    std::size_t positive = 0;
    std::size_t negative = 0;
    BigInt determinant = 1;
    Parity parity = Parity::even;
    std::vector<BigInt> invariant_factors;

    friend bool operator==(const FormInvariants&, const FormInvariants&) = default;
};

/// Splitting ℤ^n = radical ⊕ complement. `radical` and `complement` hold
/// column bases; together they form a unimodular matrix. `block` is the
/// Gram matrix on the complement and is nondegenerate.
struct ReducedForm {
    IntMatrix radical;
    IntMatrix complement;
    IntMatrix block;
};

/// UsageError unless g is square and symmetric.
ReducedForm reduce_form(const IntMatrix& g);

/// (n₊, n₋) of a symmetric matrix, by fraction-free symmetric elimination.
std::pair<std::size_t, std::size_t> inertia(const IntMatrix& g);

/// UsageError unless g is square and symmetric.
FormInvariants form_invariants(const IntMatrix& g);

/// Names of the fields on which a and b differ ("dim", "radical", "rank",
/// "signature", "det", "parity", "factors"); empty when equal.
std::vector<std::string> differing_fields(const FormInvariants& a, const FormInvariants& b);
std::vector<std::string> field_names();

/// Equality of everything except total_dim and radical_dim, i.e. of the
/// form up to a zero direct summand.
bool same_nondegenerate_part(const FormInvariants& a, const FormInvariants& b);

} // namespace hexaform::invariants
