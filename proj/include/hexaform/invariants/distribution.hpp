#pragma once

#include "hexaform/algebra/bigint.hpp"
#include "hexaform/algebra/galois_field.hpp"
#include "hexaform/complex/triangulation.hpp"

#include <map>
#include <string>
#include <vector>

namespace hexaform::invariants {

using algebra::BigInt;
using algebra::BigRational;

/// How Φ's tensor product is realized: multiplication in GF(p^n), or the
/// n×n coordinate outer product over GF(p).
enum class ValueModel { field, tensor };
std::string to_string(ValueModel m);
ValueModel parse_value_model(const std::string& s);

/// Single: x free, ξ = x^{p^m}. Double: a free coloring c, x = c^{p^{m1}},
/// ξ = c^{p^{m2}}.
struct FrobeniusSpec {
    std::uint32_t p = 2;
    std::uint32_t n = 1;
    bool twofold = false;
    std::uint32_t m = 0;
    std::uint32_t m1 = 0;
    std::uint32_t m2 = 0;

    static FrobeniusSpec single(std::uint32_t p, std::uint32_t n, std::uint32_t m) { return {p, n, false, m, 0, 0}; }
    static FrobeniusSpec doubled(std::uint32_t p, std::uint32_t n, std::uint32_t m1, std::uint32_t m2)
    {
        return {p, n, true, 0, m1, m2};
    }
    /// Frobenius exponents applied to the free coloring for x and for ξ.
    std::uint32_t latin_power() const { return twofold ? m1 : 0; }
    std::uint32_t greek_power() const { return twofold ? m2 : m; }
    std::string mode_string() const;

    friend bool operator==(const FrobeniusSpec&, const FrobeniusSpec&) = default;
};

/// Exact value counts of S over all permitted colorings. Field values print
/// as GaloisField::format; tensor values as "[[a,b],[c,d]]" with rows
/// indexed by the coordinate of the x-side factor.
struct ValueDistribution {
    ValueModel model = ValueModel::field;
    FrobeniusSpec spec;
    std::map<std::string, BigInt> counts;
    BigInt total = 0;

    BigRational probability(const std::string& value) const;
    BigRational probability_sum() const;

    friend bool operator==(const ValueDistribution&, const ValueDistribution&) = default;
};

/// HEXAFORM_CAP when set (decimal), else 10^7.
BigInt default_cap();

struct EnumerationOptions {
    BigInt cap = default_cap();
    /// Enumerate all q^d colorings instead of the quotient by the subspace
    /// on which S is constant.
    bool brute_force = false;
};

/// Permitted-space dimension d over GF(p); over GF(p^n) it is the same.
std::size_t permitted_dimension(const complex::Triangulation& t, std::uint32_t p);

/// OrientationError on an unoriented complex; CapExceeded when the number
/// of points to visit exceeds the cap.
ValueDistribution probability_distribution(const complex::Triangulation& t, const FrobeniusSpec& spec,
                                           ValueModel model, const EnumerationOptions& options = {});

struct DistributionComparison {
    bool equal = true;
    std::vector<std::string> differences;
};

/// UsageError when the models or specs differ.
DistributionComparison distribution_equal(const ValueDistribution& a, const ValueDistribution& b);

/// Image of a tensor distribution under the multiplication map
/// GF(p)^{n×n} → GF(p^n).
ValueDistribution tensor_pushforward(const ValueDistribution& tensor);

} // namespace hexaform::invariants
