#pragma once

#include "hexaform/algebra/bigint.hpp"
#include "hexaform/algebra/galois_field.hpp"
#include "hexaform/algebra/mpoly.hpp"

#include <string>
#include <vector>

namespace hexaform::frobenius {

/// x_jklm, x_iklm, x_ijlm, x_ijkm, x_ijkl: the faces of u = ijklm in the
/// order of complex::faces.
const std::vector<std::string>& face_variables();

/// Polynomial over GF(p) in the five face variables of a pentachoron.
struct CocyclePolynomial {
    std::uint32_t p = 2;
    algebra::MPoly poly{face_variables(), 2};

    int degree() const { return poly.degree(); }
    std::string to_string() const { return poly.to_string(); }

    friend bool operator==(const CocyclePolynomial& a, const CocyclePolynomial& b)
    {
        return a.p == b.p && a.poly == b.poly;
    }
};

/// Parses an expression in the face variables over GF(p).
CocyclePolynomial from_expression(std::uint32_t p, std::string_view text);

/// Φ_u with ξ = x^{p^m} and η = (R x)^{p^m}, expanded over GF(p).
CocyclePolynomial specialize(std::uint32_t p, std::uint32_t m);

/// Φ_u with x = c^{p^{m1}}, ξ = c^{p^{m2}} for a free coloring c; the free
/// variables keep the names x_*.
CocyclePolynomial specialize_double(std::uint32_t p, std::uint32_t m1, std::uint32_t m2);

/// x_iklm x_ijkm x_ijkl + x_iklm x_ijlm x_ijkl + x_jklm x_ijlm x_ijkl
/// + x_jklm x_ijlm x_ijkm + x_jklm x_iklm x_ijkm over GF(2).
CocyclePolynomial reference_cubic();

/// Σ_i (−1)^i c(x restricted to facet i of ∂Δ⁵) vanishes on every permitted
/// coloring of ∂Δ⁵ over `field`. Exhaustive; CapExceeded when q^d exceeds
/// `cap`. UsageError when the characteristic differs from c.p.
bool is_hexagon_cocycle(const CocyclePolynomial& c, const algebra::Field& field, const algebra::BigInt& cap);

/// Equal as functions on GF(q)^5 (exponents reduced by x^q = x).
bool evaluation_equivalent(const CocyclePolynomial& a, const CocyclePolynomial& b, std::uint64_t q);

} // namespace hexaform::frobenius
