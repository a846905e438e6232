#include "hexaform/frobenius/cocycle_polynomial.hpp"

#include "hexaform/complex/builtin.hpp"
#include "hexaform/errors.hpp"
#include "hexaform/hexagon/constraints.hpp"

namespace hexaform::frobenius {

using algebra::BigInt;
using algebra::GaloisField;
using algebra::MPoly;

const std::vector<std::string>& face_variables()
{
    static const std::vector<std::string> names = {"x_jklm", "x_iklm", "x_ijlm", "x_ijkm", "x_ijkl"};
    return names;
}

CocyclePolynomial from_expression(std::uint32_t p, std::string_view text)
{
    if (!algebra::is_prime(p))
        throw InvalidPrime(std::to_string(p) + " is not prime");
    return {p, MPoly::parse(text, face_variables(), p)};
}

namespace {

std::uint64_t prime_power(std::uint32_t p, std::uint32_t m)
{
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (q > (std::uint64_t(1) << 40) / p)
            throw UsageError("Frobenius exponent p^m is too large");
        q *= p;
    }
    return q;
}

// x_k + (R x)_k as a linear polynomial.
MPoly face_sum(std::uint32_t p, std::size_t k)
{
    MPoly out = MPoly::variable(face_variables(), p, k);
    for (std::size_t j = 0; j < 5; ++j)
        out += MPoly::variable(face_variables(), p, j).scaled(hexagon::kRMatrix[k][j]);
    return out;
}

std::vector<MPoly> powered_variables(std::uint32_t p, std::uint64_t e)
{
    std::vector<MPoly> out;
    for (std::size_t i = 0; i < 5; ++i)
        out.push_back(MPoly::variable(face_variables(), p, i).pow(static_cast<unsigned>(e)));
    return out;
}

} // namespace

CocyclePolynomial specialize_double(std::uint32_t p, std::uint32_t m1, std::uint32_t m2)
{
    if (!algebra::is_prime(p))
        throw InvalidPrime(std::to_string(p) + " is not prime");
    // (x + y)_jklm (ξ + η)_ijkl with y = R x, η = R ξ, then x, ξ replaced by
    // Frobenius powers of one free coloring.
    const MPoly latin = face_sum(p, 0).substitute(powered_variables(p, prime_power(p, m1)));
    const MPoly greek = face_sum(p, 4).substitute(powered_variables(p, prime_power(p, m2)));
    return {p, latin * greek};
}

CocyclePolynomial specialize(std::uint32_t p, std::uint32_t m) { return specialize_double(p, 0, m); }

CocyclePolynomial reference_cubic()
{
    return from_expression(2, "x_iklm x_ijkm x_ijkl + x_iklm x_ijlm x_ijkl + x_jklm x_ijlm x_ijkl"
                              " + x_jklm x_ijlm x_ijkm + x_jklm x_iklm x_ijkm");
}

bool is_hexagon_cocycle(const CocyclePolynomial& c, const algebra::Field& field, const BigInt& cap)
{
    if (field->characteristic() != c.p)
        throw UsageError("field characteristic " + std::to_string(field->characteristic())
                         + " differs from the polynomial's p = " + std::to_string(c.p));
    const auto s4 = complex::boundary_delta5();
    const auto system = hexagon::build_constraints(s4);
    const auto space = hexagon::solve_permitted(system, algebra::make_field(c.p, 1));
    const std::size_t d = space.dim();
    const BigInt required = algebra::ipow(BigInt(field->order()), static_cast<unsigned>(d));
    if (required > cap)
        throw CapExceeded("cocycle check needs " + required.str() + " colorings, cap is " + cap.str(),
                          required.str());

    const auto& f = *field;
    struct Term {
        GaloisField::Code coefficient;
        std::vector<std::uint32_t> exponents;
    };
    std::vector<Term> terms;
    for (const auto& [e, k] : c.poly.terms())
        terms.push_back({f.from_integer(static_cast<long long>(k)), e});

    const auto& layout = space.layout;
    std::vector<std::array<std::size_t, 5>> facet_x;
    for (const auto& u : s4.pentachora()) {
        auto idx = layout.face_indices(u);
        for (auto& i : idx)
            i = layout.x(i);
        facet_x.push_back(idx);
    }
    const auto& signs = s4.require_signs();

    std::vector<GaloisField::Code> lambda(d, 0), coloring(layout.variable_count());
    const GaloisField::Code q = f.order();
    while (true) {
        std::fill(coloring.begin(), coloring.end(), 0);
        for (std::size_t a = 0; a < d; ++a)
            if (lambda[a])
                for (std::size_t v = 0; v < coloring.size(); ++v)
                    if (space.basis[a][v])
                        coloring[v] = f.add(coloring[v], f.mul(lambda[a], space.basis[a][v]));
        GaloisField::Code total = 0;
        for (std::size_t i = 0; i < facet_x.size(); ++i) {
            GaloisField::Code value = 0;
            for (const auto& t : terms) {
                GaloisField::Code m = t.coefficient;
                for (std::size_t k = 0; k < 5 && m; ++k)
                    if (t.exponents[k])
                        m = f.mul(m, f.pow(coloring[facet_x[i][k]], t.exponents[k]));
                value = f.add(value, m);
            }
            total = signs[i] > 0 ? f.add(total, value) : f.sub(total, value);
        }
        if (total)
            return false;
        std::size_t a = 0;
        while (a < d && ++lambda[a] == q)
            lambda[a++] = 0;
        if (a == d)
            break;
    }
    return true;
}

bool evaluation_equivalent(const CocyclePolynomial& a, const CocyclePolynomial& b, std::uint64_t q)
{
    return a.p == b.p && a.poly.reduce_exponents(q) == b.poly.reduce_exponents(q);
}

} // namespace hexaform::frobenius
