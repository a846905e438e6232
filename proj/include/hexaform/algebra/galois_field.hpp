#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hexaform::algebra {

class GaloisField;
/// Fields are shared immutable values; elements keep their parent alive.
using Field = std::shared_ptr<const GaloisField>;

/// GF(p^n) = GF(p)[g]/(modulus). Elements are encoded as integers
/// code = Σ c_i p^i over the power basis 1, g, ..., g^{n-1}.
class GaloisField {
public:
    using Code = std::uint32_t;

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return n_; }
    std::uint32_t order() const noexcept { return q_; }
    /// Monic modulus coefficients, constant term first (size n + 1).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    std::string modulus_string() const;

    Code zero() const noexcept { return 0; }
    Code one() const noexcept { return 1; }
    /// The class of g, the root of the modulus.
    Code generator_root() const;

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;
    Code pow(Code a, std::uint64_t e) const;
    /// a ↦ a^{p^m}.
    Code frobenius(Code a, std::uint32_t m) const;
    /// Image of an integer under ℤ → GF(p) ⊂ GF(p^n).
    Code from_integer(long long v) const;

    std::vector<std::uint32_t> coefficients(Code a) const;
    Code from_coefficients(const std::vector<std::uint32_t>& c) const;
    /// Element in the prime subfield?
    bool in_prime_field(Code a) const noexcept { return a < p_; }

    /// Canonical text: prime field elements as integers, otherwise a
    /// polynomial in g, lowest degree first, e.g. "1+2g+g^2".
    std::string format(Code a) const;

    bool same_as(const GaloisField& other) const noexcept
    {
        return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
    }

    GaloisField(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);

private:
    Code mul_poly(Code a, Code b) const;

    std::uint32_t p_;
    std::uint32_t n_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> powers_; // p^i
    // Discrete log tables over a primitive element.
    std::vector<Code> exp_;
    std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t p);

/// Monic irreducible test over GF(p), coefficients constant term first.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// GF(p^n) with the lexicographically smallest monic irreducible modulus
/// (coefficients compared from degree n-1 down to the constant term).
/// Throws InvalidPrime for composite p.
Field make_field(std::uint32_t p, std::uint32_t n);

/// Field element with its parent. Mixing parents is a UsageError.
class GFElem {
public:
    GFElem() = default;
    GFElem(Field field, GaloisField::Code code);

    static GFElem zero(const Field& f) { return GFElem(f, 0); }
    static GFElem one(const Field& f) { return GFElem(f, 1); }
    static GFElem from_integer(const Field& f, long long v) { return GFElem(f, f->from_integer(v)); }

    const Field& field() const noexcept { return field_; }
    GaloisField::Code code() const noexcept { return code_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coefficients(code_); }
    bool is_zero() const noexcept { return code_ == 0; }

    GFElem frobenius(std::uint32_t m) const { return {field_, field_->frobenius(code_, m)}; }
    GFElem pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
    GFElem inverse() const;

    friend GFElem operator+(const GFElem& a, const GFElem& b);
    friend GFElem operator-(const GFElem& a, const GFElem& b);
    friend GFElem operator*(const GFElem& a, const GFElem& b);
    friend GFElem operator/(const GFElem& a, const GFElem& b);
    friend GFElem operator-(const GFElem& a);
    GFElem& operator+=(const GFElem& b) { return *this = *this + b; }
    GFElem& operator-=(const GFElem& b) { return *this = *this - b; }
    GFElem& operator*=(const GFElem& b) { return *this = *this * b; }

    friend bool operator==(const GFElem& a, const GFElem& b);

    std::string to_string() const { return field_->format(code_); }

private:
    Field field_;
    GaloisField::Code code_ = 0;
};

/// a ↦ a^{p^m}
inline GFElem frobenius_power(const GFElem& a, std::uint32_t m) { return a.frobenius(m); }

} // namespace hexaform::algebra
