#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hexaform::algebra {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Quotient rounded toward negative infinity; divisor must be nonzero.
inline BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/// Non-negative residue of a modulo m (m > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& m)
{
    BigInt r = a % m;
    if (r < 0)
        r += m;
    return r;
}

inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline std::string to_string(const BigInt& a) { return a.str(); }

/// p^e as a BigInt.
inline BigInt ipow(const BigInt& base, unsigned exponent)
{
    BigInt result = 1;
    BigInt b = base;
    while (exponent) {
        if (exponent & 1u)
            result *= b;
        b *= b;
        exponent >>= 1u;
    }
    return result;
}

} // namespace hexaform::algebra
