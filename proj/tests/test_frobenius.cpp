#include "hexaform/complex/builtin.hpp"
#include "hexaform/complex/pachner.hpp"
#include "hexaform/errors.hpp"
#include "hexaform/frobenius/cocycle_polynomial.hpp"
#include "hexaform/hexagon/action.hpp"

#include <doctest.h>

#include <random>

using namespace hexaform;
using namespace hexaform::frobenius;
using algebra::MPoly;

namespace {

const algebra::BigInt kCap = 1000000;

MPoly linear(std::uint32_t p, const std::array<int, 5>& c)
{
    MPoly out(face_variables(), p);
    for (std::size_t i = 0; i < 5; ++i)
        out += MPoly::variable(face_variables(), p, i).scaled(c[i]);
    return out;
}

// Replace each face variable by its p^e-th power.
MPoly frobenius_substitute(const MPoly& f, std::uint32_t p, unsigned e)
{
    std::vector<MPoly> images;
    unsigned power = 1;
    for (unsigned i = 0; i < e; ++i)
        power *= p;
    for (std::size_t i = 0; i < 5; ++i)
        images.push_back(MPoly::variable(face_variables(), p, i).pow(power));
    return f.substitute(images);
}

MPoly permuted(const MPoly& f, const std::array<std::size_t, 5>& perm)
{
    std::vector<MPoly> images;
    for (std::size_t i = 0; i < 5; ++i)
        images.push_back(MPoly::variable(face_variables(), f.modulus(), perm[i]));
    return f.substitute(images);
}

} // namespace

TEST_CASE("face variable names")
{
    CHECK(face_variables() == std::vector<std::string>{"x_jklm", "x_iklm", "x_ijlm", "x_ijkm", "x_ijkl"});
}

TEST_CASE("frobenius specializations in characteristic two")
{
    CHECK(specialize(2, 0) == from_expression(2, "(x_jklm + x_ijlm + x_ijkm)*(x_iklm + x_ijlm + x_ijkl)"));
    CHECK(specialize(2, 1) == from_expression(2, "(x_jklm + x_ijlm + x_ijkm)*(x_iklm^2 + x_ijlm^2 + x_ijkl^2)"));
    CHECK(specialize_double(2, 1, 2)
          == from_expression(2, "(x_jklm^2 + x_ijlm^2 + x_ijkm^2)*(x_iklm^4 + x_ijlm^4 + x_ijkl^4)"));
    CHECK(specialize(2, 0).degree() == 2);
    CHECK(specialize(2, 1).degree() == 3);
    CHECK(specialize(2, 2).degree() == 5);
    CHECK(specialize_double(2, 1, 2).degree() == 6);
}

TEST_CASE("specialization in characteristic three by hand")
{
    // Rows 0 and 4 of 1 + R.
    const auto rear = linear(3, {1, -2, 1, 1, -2});
    const auto front = linear(3, {0, 1, -1, 0, 1});
    CHECK(specialize(3, 0).poly == rear * front);
    CHECK(specialize(3, 1).poly == rear * frobenius_substitute(front, 3, 1));
    CHECK(specialize(3, 0).p == 3);
    CHECK(specialize(3, 0).degree() == 2);
    CHECK(specialize(3, 1).degree() == 4);
}

TEST_CASE("single and double frobenius relations")
{
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t m : {0u, 1u, 2u}) {
            CHECK(specialize(p, m) == specialize_double(p, 0, m));
            CHECK(specialize_double(p, m, m).poly == frobenius_substitute(specialize(p, 0).poly, p, m));
        }
    const auto rear = linear(2, {1, 0, 1, 1, 0});
    const auto front = linear(2, {0, 1, 1, 0, 1});
    CHECK(specialize_double(2, 1, 0).poly == rear.pow(2) * front);
    CHECK(specialize_double(2, 0, 1).poly == rear * front.pow(2));
    CHECK_FALSE(specialize_double(2, 1, 0) == specialize_double(2, 0, 1));
}

TEST_CASE("reference cubic")
{
    const auto c = reference_cubic();
    CHECK(c.p == 2);
    CHECK(c.poly.term_count() == 5);
    CHECK(c.degree() == 3);
    CHECK(c.poly.is_homogeneous());
    CHECK(c == from_expression(2, "x_iklm*x_ijkm*x_ijkl + x_iklm*x_ijlm*x_ijkl + x_jklm*x_ijlm*x_ijkl"
                                  " + x_jklm*x_ijlm*x_ijkm + x_jklm*x_iklm*x_ijkm"));
    CHECK_FALSE(c == specialize(2, 1));
    CHECK_FALSE(c == specialize_double(2, 0, 1));
    CHECK_FALSE(c == specialize_double(2, 1, 0));
    for (std::uint64_t q : {2u, 4u, 8u}) {
        CHECK_FALSE(evaluation_equivalent(c, specialize(2, 1), q));
        CHECK_FALSE(evaluation_equivalent(c, specialize_double(2, 1, 0), q));
    }
    // Invariant under reversing the face order.
    CHECK(permuted(c.poly, {4, 3, 2, 1, 0}) == c.poly);
    CHECK_FALSE(permuted(specialize(2, 1).poly, {4, 3, 2, 1, 0}) == specialize(2, 1).poly);
}

TEST_CASE("hexagon cocycle checks")
{
    const auto gf2 = algebra::make_field(2, 1);
    const auto gf4 = algebra::make_field(2, 2);
    const auto gf3 = algebra::make_field(3, 1);
    CHECK(is_hexagon_cocycle(reference_cubic(), gf2, kCap));
    CHECK(is_hexagon_cocycle(reference_cubic(), gf4, kCap));
    for (std::uint32_t m : {0u, 1u, 2u}) {
        CHECK(is_hexagon_cocycle(specialize(2, m), gf2, kCap));
        CHECK(is_hexagon_cocycle(specialize(2, m), gf4, kCap));
        CHECK(is_hexagon_cocycle(specialize(3, m), gf3, kCap));
    }
    CHECK(is_hexagon_cocycle(specialize_double(2, 1, 2), gf4, kCap));
    CHECK(is_hexagon_cocycle(specialize_double(2, 1, 0), gf4, kCap));
    CHECK(is_hexagon_cocycle(CocyclePolynomial{}, gf2, kCap));

    CHECK_FALSE(is_hexagon_cocycle(from_expression(2, "x_jklm*x_iklm*x_ijlm"), gf2, kCap));
    CHECK_FALSE(is_hexagon_cocycle(from_expression(2, "x_jklm"), gf2, kCap));
    CHECK_FALSE(is_hexagon_cocycle(from_expression(3, "x_jklm*x_iklm"), gf3, kCap));

    CHECK_THROWS_AS(is_hexagon_cocycle(reference_cubic(), gf3, kCap), UsageError);
    CHECK_THROWS_AS(is_hexagon_cocycle(reference_cubic(), algebra::make_field(2, 3), kCap), CapExceeded);
}

TEST_CASE("evaluation equivalence")
{
    const auto a = from_expression(2, "x_jklm^2");
    const auto b = from_expression(2, "x_jklm");
    CHECK(evaluation_equivalent(a, b, 2));
    CHECK_FALSE(evaluation_equivalent(a, b, 4));
    CHECK_THROWS_AS(from_expression(2, "x_abcd"), UsageError);
}

TEST_CASE("polynomial evaluation agrees with the action")
{
    std::mt19937_64 rng(3);
    const auto f = algebra::make_field(2, 2);
    auto t = complex::cp2_kuhnel9();
    complex::MovePicker picker(4);
    t = complex::apply_move(t, picker.pick(t));
    const auto space = hexagon::solve_permitted(hexagon::build_constraints(t), f);
    for (auto [m1, m2] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 2}}) {
        const auto poly = specialize_double(2, m1, m2);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<algebra::GFElem> c(space.layout.variable_count(), algebra::GFElem::zero(f));
            for (const auto& b : space.basis) {
                const auto k = static_cast<algebra::GaloisField::Code>(rng() % 4);
                for (std::size_t i = 0; i < b.size(); ++i)
                    c[i] += algebra::GFElem(f, f->mul(k, b[i]));
            }
            std::vector<algebra::GFElem> latin, greek;
            for (const auto& v : c) {
                latin.push_back(v.frobenius(m1));
                greek.push_back(v.frobenius(m2));
            }
            auto total = algebra::GFElem::zero(f);
            for (std::size_t u = 0; u < t.size(); ++u) {
                const auto faces = space.layout.face_indices(t.pentachora()[u]);
                std::vector<algebra::GFElem> values;
                for (auto k : faces)
                    values.push_back(c[space.layout.x(k)]);
                const auto v = poly.poly.evaluate(values);
                total = (*t.signs())[u] > 0 ? total + v : total - v;
            }
            CHECK(total == hexagon::action_value(t, space.layout, latin, greek));
        }
    }
}
