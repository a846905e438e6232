#pragma once

#include "hexaform/algebra/bigint.hpp"
#include "hexaform/algebra/galois_field.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hexaform::algebra {

/// Multivariate polynomial over ℤ (modulus 0) or GF(p) (modulus p).
///
/// Terms are kept in graded lexicographic order with the variables ranked as
/// declared: higher total degree first, then the larger exponent of the
/// earliest variable. Zero coefficients are never stored and GF(p)
/// coefficients are kept in {0, ..., p-1}, so two polynomials are equal
/// exactly when their term maps are.
class MPoly {
public:
    using Exponents = std::vector<std::uint32_t>;

    struct GradedLexGreater {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, BigInt, GradedLexGreater>;

    MPoly(std::vector<std::string> variables, std::uint32_t modulus);

    static MPoly constant(std::vector<std::string> variables, std::uint32_t modulus, const BigInt& c);
    static MPoly variable(std::vector<std::string> variables, std::uint32_t modulus, std::size_t index);
    /// UsageError for an undeclared name.
    static MPoly variable(std::vector<std::string> variables, std::uint32_t modulus, std::string_view name);

    /// Expands a formal expression built from declared variables, integer
    /// constants, + - * ^ and parentheses; juxtaposition multiplies, so
    /// "(x+y)(x+y)" is accepted. UsageError on undeclared names or bad syntax.
    static MPoly parse(std::string_view text, std::vector<std::string> variables, std::uint32_t modulus);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    const TermMap& terms() const noexcept { return terms_; }

    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    BigInt coefficient(const Exponents& e) const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
    MPoly& operator*=(const MPoly& b) { return *this = *this * b; }
    MPoly scaled(const BigInt& c) const;
    MPoly pow(unsigned e) const;

    /// Replaces variable i by images[i]; all images share one variable list.
    MPoly substitute(const std::vector<MPoly>& images) const;
    /// Same polynomial viewed over GF(p); identity when already over GF(p).
    MPoly reduced_mod(std::uint32_t p) const;
    /// Applies x^q = x to every exponent (function-equivalence over GF(q)).
    MPoly reduce_exponents(std::uint64_t q) const;

    GFElem evaluate(const std::vector<GFElem>& values) const;
    BigInt evaluate(const std::vector<BigInt>& values) const;

    std::string to_string() const;

    friend bool operator==(const MPoly& a, const MPoly& b);

private:
    void add_term(const Exponents& e, const BigInt& c);
    void check_compatible(const MPoly& other) const;

    std::vector<std::string> vars_;
    std::uint32_t modulus_;
    TermMap terms_;
};

} // namespace hexaform::algebra
