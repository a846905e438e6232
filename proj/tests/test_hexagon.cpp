#include "hexaform/algebra/normal_form.hpp"
#include "hexaform/complex/builtin.hpp"
#include "hexaform/complex/pachner.hpp"
#include "hexaform/errors.hpp"
#include "hexaform/hexagon/cocycle.hpp"

#include <doctest.h>

#include <random>

using namespace hexaform;
using namespace hexaform::hexagon;
using algebra::BigInt;
using algebra::GFElem;
using algebra::IntMatrix;

namespace {

std::vector<GFElem> random_permitted(const FieldPermittedSpace& s, std::mt19937_64& rng)
{
    const auto& f = *s.field;
    std::vector<GFElem> out(s.layout.variable_count(), GFElem::zero(s.field));
    for (const auto& b : s.basis) {
        const auto c = static_cast<algebra::GaloisField::Code>(rng() % f.order());
        for (std::size_t i = 0; i < b.size(); ++i)
            out[i] += GFElem(s.field, f.mul(c, b[i]));
    }
    return out;
}

std::vector<GFElem> random_coloring(const algebra::Field& f, std::size_t n, std::mt19937_64& rng)
{
    std::vector<GFElem> out;
    for (std::size_t i = 0; i < n; ++i)
        out.emplace_back(f, static_cast<algebra::GaloisField::Code>(rng() % f->order()));
    return out;
}

std::vector<Triangulation> sample_closed()
{
    std::vector<Triangulation> out = {complex::boundary_delta5(), complex::cp2_kuhnel9()};
    for (std::uint64_t seed : {1, 2, 3}) {
        complex::MovePicker picker(seed);
        auto t = complex::cp2_kuhnel9();
        for (int i = 0; i < 5; ++i)
            t = complex::apply_move(t, picker.pick(t));
        out.push_back(t);
    }
    return out;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n)
{
    auto p = IntMatrix::identity(n);
    if (n < 2)
        return p;
    for (int k = 0; k < 30; ++k) {
        const auto a = rng() % n;
        auto b = rng() % n;
        if (a == b)
            b = (b + 1) % n;
        p.add_col_multiple(a, b, BigInt(static_cast<long long>(rng() % 5) - 2));
    }
    return p;
}

} // namespace

TEST_CASE("constraint system shape")
{
    const Triangulation ball("ball", {complex::Pentachoron({0, 1, 2, 3, 4})}, std::vector<int>{1});
    const auto c1 = build_constraints(ball);
    CHECK(c1.equation_count() == 5);
    CHECK(c1.variable_count() == 10);
    const auto c = build_constraints(complex::boundary_delta5());
    CHECK(c.equation_count() == 30);
    CHECK(c.variable_count() == 30);
    CHECK(r_matrix()(3, 1) == 3);
    // Row k of the pentachoron 01234: y on face k minus R times the five x's.
    const auto f = c1.layout.face_indices(complex::Pentachoron({0, 1, 2, 3, 4}));
    for (std::size_t k = 0; k < 5; ++k)
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(c1.matrix(k, c1.layout.x(f[j])) == -kRMatrix[k][j]);
            CHECK(c1.matrix(k, c1.layout.y(f[j])) == (j == k ? 1 : 0));
        }
}

TEST_CASE("variable layout")
{
    const auto s4 = complex::boundary_delta5();
    const VariableLayout layout(s4);
    CHECK(layout.tetrahedron_count() == 15);
    CHECK(layout.tetrahedra().front() == Tetrahedron{{0, 1, 2, 3}});
    CHECK(layout.tetrahedra().back() == Tetrahedron{{2, 3, 4, 5}});
    CHECK(layout.y(0) == 15);
    const auto f = layout.face_indices(complex::Pentachoron({0, 1, 2, 3, 4}));
    CHECK(layout.tetrahedra()[f[0]] == Tetrahedron{{1, 2, 3, 4}});
    CHECK(layout.tetrahedra()[f[4]] == Tetrahedron{{0, 1, 2, 3}});
}

TEST_CASE("permitted spaces")
{
    const Triangulation ball("ball", {complex::Pentachoron({0, 1, 2, 3, 4})}, std::vector<int>{1});
    CHECK(solve_permitted(build_constraints(ball)).dim() == 5);

    const auto c = build_constraints(complex::boundary_delta5());
    const auto z = solve_permitted(c);
    CHECK(z.dim() == 9);
    CHECK(c.variable_count() - algebra::rational_rank(c.matrix) == 9);
    CHECK(algebra::is_saturated_basis(z.basis));
    CHECK((c.matrix * z.basis).is_zero());

    for (const auto& t : sample_closed()) {
        const auto ct = build_constraints(t);
        const auto zt = solve_permitted(ct);
        CHECK((ct.matrix * zt.basis).is_zero());
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const auto f = algebra::make_field(p, 1);
            const auto ft = solve_permitted(ct, f);
            CHECK(ft.dim() >= zt.dim());
            for (const auto& b : ft.basis)
                CHECK(is_permitted(ct, *f, b));
            // Reduction of every ℤ generator is permitted mod p.
            for (std::size_t a = 0; a < zt.dim(); ++a) {
                std::vector<algebra::GaloisField::Code> v;
                for (const auto& x : zt.vector(a))
                    v.push_back(f->from_integer(static_cast<long long>(x % p)));
                CHECK(is_permitted(ct, *f, v));
            }
        }
    }
    const auto gf4 = solve_permitted(c, algebra::make_field(2, 2));
    CHECK(gf4.dim() == solve_permitted(c, algebra::make_field(2, 1)).dim());
}

TEST_CASE("phi on a single pentachoron")
{
    const complex::Pentachoron u({0, 1, 2, 3, 4});
    const Triangulation ball("ball", {u}, std::vector<int>{1});
    const VariableLayout layout(ball);
    std::vector<BigInt> ones(10, BigInt(1));
    CHECK(phi(layout, u, ones, ones) == 4);
    // A permitted coloring: x all 1, y = R·1 = (−2, −1, 0, 1, 0).
    std::vector<BigInt> permitted = {1, 1, 1, 1, 1, 0, 1, 0, -1, -2};
    // Tetrahedra in lex order: 0123, 0124, 0134, 0234, 1234 = faces 4,3,2,1,0.
    CHECK(is_permitted(build_constraints(ball), permitted));
    CHECK(phi(layout, u, permitted, permitted) == -1);
    CHECK(phi_second_line(layout, u, permitted, permitted) == -1);
    CHECK(action_value(ball, layout, permitted, permitted) == -1);
}

TEST_CASE("both expressions of phi agree on permitted colorings")
{
    std::mt19937_64 rng(5);
    const auto f = algebra::make_field(5, 1);
    for (const auto& t : sample_closed()) {
        const auto space = solve_permitted(build_constraints(t), f);
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_permitted(space, rng);
            const auto b = random_permitted(space, rng);
            for (const auto& u : t.pentachora())
                CHECK(phi(space.layout, u, a, b) == phi_second_line(space.layout, u, a, b));
        }
    }
}

TEST_CASE("action is bilinear")
{
    std::mt19937_64 rng(9);
    const auto f = algebra::make_field(3, 1);
    const auto t = complex::cp2_kuhnel9();
    const VariableLayout layout(t);
    const std::size_t n = layout.variable_count();
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_coloring(f, n, rng);
        const auto b = random_coloring(f, n, rng);
        const auto c = random_coloring(f, n, rng);
        const GFElem lambda(f, static_cast<algebra::GaloisField::Code>(rng() % 3));
        std::vector<GFElem> sum, scaled;
        for (std::size_t i = 0; i < n; ++i) {
            sum.push_back(a[i] + b[i]);
            scaled.push_back(lambda * a[i]);
        }
        CHECK(action_value(t, layout, sum, c) == action_value(t, layout, a, c) + action_value(t, layout, b, c));
        CHECK(action_value(t, layout, c, sum) == action_value(t, layout, c, a) + action_value(t, layout, c, b));
        CHECK(action_value(t, layout, scaled, c) == lambda * action_value(t, layout, a, c));
    }
}

TEST_CASE("gram matrix")
{
    const auto s4 = complex::boundary_delta5();
    CHECK(gram_matrix(s4).is_zero());
    CHECK(gram_matrix(s4).rows() == 9);
    CHECK_THROWS_AS(gram_matrix(s4.without_signs()), OrientationError);

    const auto cp2 = complex::cp2_kuhnel9();
    const auto space = solve_permitted(build_constraints(cp2));
    const auto g = gram_matrix(cp2, space);
    CHECK(g.rows() == 28);
    CHECK(g.is_symmetric());

    // Entry-wise agreement with the direct action.
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            CHECK(g(a, b) == action_value(cp2, space.layout, space.vector(a), space.vector(b)));

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 3; ++trial) {
        const auto p = random_unimodular(rng, space.dim());
        IntegerPermittedSpace moved{space.layout, space.basis * p};
        CHECK(gram_matrix(cp2, moved) == p.transpose() * g * p);
    }

    for (const auto& t : sample_closed())
        CHECK(gram_matrix(t).is_symmetric());

    // Field Gram equals the integer one reduced, when the ℤ basis spans.
    const auto f = algebra::make_field(7, 1);
    const auto fs = solve_permitted(build_constraints(cp2), f);
    REQUIRE(fs.dim() == space.dim());
    const auto gf = gram_matrix(cp2, fs);
    CHECK(gf.size() == fs.dim());
    for (const auto& row : gf)
        CHECK(row.size() == fs.dim());
}

TEST_CASE("symmetry identity per pentachoron")
{
    std::mt19937_64 rng(7);
    const auto f = algebra::make_field(7, 1);
    bool opposite_sign_fails = false;
    std::size_t checked = 0;
    for (const auto& t : sample_closed()) {
        const auto space = solve_permitted(build_constraints(t), f);
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_permitted(space, rng);
            const auto b = random_permitted(space, rng);
            const auto& u = t.pentachora()[rng() % t.size()];
            const auto id = symmetry_identity(space.layout, u, a, b);
            CHECK(id.lhs == id.first);
            CHECK(id.lhs == id.second);
            if (!id.lhs.is_zero() && id.lhs != -id.first)
                opposite_sign_fails = true;
            ++checked;
        }
    }
    CHECK(checked == 1000);
    CHECK(opposite_sign_fails);
}

TEST_CASE("coboundary terms cancel on closed oriented complexes")
{
    std::mt19937_64 rng(8);
    const auto f = algebra::make_field(7, 1);
    for (const auto& t : sample_closed()) {
        const auto space = solve_permitted(build_constraints(t), f);
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_permitted(space, rng);
            const auto b = random_permitted(space, rng);
            for (const auto& d : symmetry_defect(t, space.layout, a, b))
                CHECK(d.is_zero());
            CHECK(action_value(t, space.layout, a, b) == action_value(t, space.layout, b, a));
        }
    }
    // With boundary the defect survives on boundary faces.
    const Triangulation ball("ball", {complex::Pentachoron({0, 1, 2, 3, 4})}, std::vector<int>{1});
    const auto space = solve_permitted(build_constraints(ball), f);
    bool nonzero = false;
    for (int trial = 0; trial < 20 && !nonzero; ++trial) {
        const auto a = random_permitted(space, rng);
        const auto b = random_permitted(space, rng);
        for (const auto& d : symmetry_defect(ball, space.layout, a, b))
            nonzero = nonzero || !d.is_zero();
    }
    CHECK(nonzero);
}

TEST_CASE("cocycle condition on the boundary of the 5-simplex")
{
    const auto z = verify_cocycle(nullptr);
    CHECK(z.ring == "Z");
    CHECK(z.dimension == 9);
    CHECK(z.holds);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
        const auto r = verify_cocycle(algebra::make_field(p, n));
        CHECK(r.holds);
        CHECK(r.dimension >= 9);
    }
    CHECK(verify_cocycle(algebra::make_field(2, 2)).ring == "GF(4)");

    auto broken = kRMatrix;
    broken[0][0] = 1;
    CHECK_FALSE(verify_cocycle(nullptr, broken).holds);
    CHECK_FALSE(verify_cocycle(algebra::make_field(3, 1), broken).holds);
    auto harmless = kRMatrix;
    harmless[2][2] += 1;
    CHECK(verify_cocycle(nullptr, harmless).holds);
}
