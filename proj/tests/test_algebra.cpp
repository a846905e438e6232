#include "hexaform/algebra/gf_linalg.hpp"
#include "hexaform/algebra/mpoly.hpp"
#include "hexaform/algebra/normal_form.hpp"
#include "hexaform/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hexaform;
using namespace hexaform::algebra;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound)
{
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

bool unimodular(const IntMatrix& m) { return abs_value(determinant(m)) == 1; }

void check_smith(const IntMatrix& a)
{
    const auto s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(unimodular(s.u));
    CHECK(unimodular(s.v));
    CHECK(s.u * s.u_inverse == IntMatrix::identity(a.rows()));
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j)
                CHECK(s.d(i, j) == 0);
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] != 0)
            CHECK(diag[i + 1] % diag[i] == 0);
        else
            CHECK(diag[i + 1] == 0);
    }
}

} // namespace

TEST_CASE("smith normal form examples")
{
    const auto id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.d == IntMatrix::identity(3));
    CHECK(id.u == IntMatrix::identity(3));
    CHECK(id.v == IntMatrix::identity(3));

    // gcd(4, 6) = 2 and 2·12 = |det| = 24.
    const auto s = smith_normal_form(IntMatrix{{4, 0}, {0, 6}});
    CHECK(s.d == IntMatrix{{2, 0}, {0, 12}});

    CHECK(smith_normal_form(IntMatrix(2, 2)).d.is_zero());
}

TEST_CASE("smith normal form properties on random matrices")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 5;
        const std::size_t c = 1 + rng() % 5;
        check_smith(random_matrix(rng, r, c, 6));
    }
    check_smith(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
}

TEST_CASE("integer kernel basis examples")
{
    CHECK(integer_kernel_basis(IntMatrix{{1, -1}}) == IntMatrix{{1}, {1}});
    CHECK(integer_kernel_basis(IntMatrix::identity(3)).cols() == 0);

    const auto k = integer_kernel_basis(IntMatrix{{2, 4}});
    REQUIRE(k.cols() == 1);
    // Oracle: smallest nonzero solutions of 2a + 4b = 0 with |a|,|b| <= 5 are ±(2, -1).
    std::vector<std::pair<int, int>> minimal;
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b)
            if ((a || b) && 2 * a + 4 * b == 0 && std::abs(a) + std::abs(b) == 3)
                minimal.emplace_back(a, b);
    CHECK(minimal.size() == 2);
    const bool matches = (k(0, 0) == 2 && k(1, 0) == -1) || (k(0, 0) == -2 && k(1, 0) == 1);
    CHECK(matches);
}

TEST_CASE("integer kernel basis is saturated and complete")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng() % 4;
        const std::size_t c = r + rng() % 4;
        auto a = random_matrix(rng, r, c, 4);
        // Scale a row to force non-unit pivots.
        for (std::size_t j = 0; j < c; ++j)
            a(0, j) *= 3;
        const auto k = integer_kernel_basis(a);
        CHECK(k.cols() == c - rational_rank(a));
        CHECK((a * k).is_zero());
        if (k.cols())
            CHECK(is_saturated_basis(k));
        CHECK(integer_kernel_basis(a) == k);
    }
}

TEST_CASE("determinant and hermite form")
{
    CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    const auto h = row_hermite_form(IntMatrix{{2, 4}, {1, 3}});
    CHECK(h == IntMatrix{{1, 1}, {0, 2}});
}

TEST_CASE("unimodular completion and lattice solving")
{
    const IntMatrix k{{1}, {2}, {3}};
    const auto c = unimodular_completion(k);
    CHECK(unimodular(c));
    const auto coords = solve_in_lattice(c.column_block(0, 1), {2, 4, 6});
    REQUIRE(coords);
    CHECK(abs_value((*coords)[0]) == 2);
    CHECK_FALSE(solve_in_lattice(IntMatrix{{2}, {0}}, {1, 0}));
    CHECK_THROWS_AS(unimodular_completion(IntMatrix{{2}, {0}}), UsageError);
}

TEST_CASE("field construction")
{
    CHECK(make_field(2, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
    // Only irreducible monic quadratic over GF(2).
    CHECK(make_field(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    // x² + 1 has no root mod 3 and precedes every other irreducible.
    CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(make_field(2, 3)->order() == 8);
    CHECK_THROWS_AS(make_field(4, 1), InvalidPrime);
    CHECK_THROWS_AS(make_field(1, 2), InvalidPrime);
}

TEST_CASE("field modulus is the smallest irreducible by exhaustion")
{
    // Oracle: mark every product of two monic factors as reducible, then take
    // the first unmarked monic polynomial in the documented order.
    auto monic = [](std::uint32_t p, std::uint32_t deg) {
        std::vector<std::vector<std::uint32_t>> out;
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < deg; ++i)
            count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> poly(deg + 1, 0);
            poly[deg] = 1;
            std::uint64_t rest = idx;
            for (std::uint32_t k = 0; k < deg; ++k) {
                poly[k] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            out.push_back(poly);
        }
        return out;
    };
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 4}, {3, 3}}) {
        std::set<std::vector<std::uint32_t>> reducible;
        for (std::uint32_t a = 1; a < n; ++a)
            for (const auto& f : monic(p, a))
                for (const auto& g : monic(p, n - a)) {
                    std::vector<std::uint32_t> h(n + 1, 0);
                    for (std::size_t i = 0; i < f.size(); ++i)
                        for (std::size_t j = 0; j < g.size(); ++j)
                            h[i + j] = (h[i + j] + f[i] * g[j]) % p;
                    reducible.insert(h);
                }
        auto candidates = monic(p, n);
        // Lexicographic from the x^{n-1} coefficient down to the constant term.
        std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
            return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
        });
        std::vector<std::uint32_t> best;
        for (const auto& c : candidates)
            if (!reducible.count(c)) {
                best = c;
                break;
            }
        CAPTURE(p);
        CAPTURE(n);
        CHECK(make_field(p, n)->modulus() == best);
        for (const auto& c : candidates)
            CHECK(is_irreducible(c, p) == !reducible.count(c));
    }
}

TEST_CASE("field axioms exhaustively for q <= 16")
{
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {13, 1}}) {
        const auto f = make_field(p, n);
        const auto q = f->order();
        CAPTURE(q);
        for (GaloisField::Code a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a)
                CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->pow(a, q) == a);
            for (GaloisField::Code b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                CHECK(f->sub(f->add(a, b), b) == a);
                for (GaloisField::Code c = 0; c < q; ++c) {
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                }
            }
        }
    }
}

TEST_CASE("frobenius power")
{
    const auto f4 = make_field(2, 2);
    const GFElem g(f4, f4->generator_root());
    CHECK(frobenius_power(g, 0) == g);
    CHECK(frobenius_power(g, 1) == g * g);
    CHECK(frobenius_power(g, 1) == g + GFElem::one(f4));
    CHECK(frobenius_power(g, 1).to_string() == "1+g");

    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 2}, {3, 2}, {2, 4}}) {
        const auto f = make_field(p, n);
        for (std::uint32_t m = 0; m <= n; ++m)
            for (GaloisField::Code a = 0; a < f->order(); ++a) {
                std::uint64_t e = 1;
                for (std::uint32_t i = 0; i < m; ++i)
                    e *= p;
                CHECK(f->frobenius(a, m) == f->pow(a, e));
                for (GaloisField::Code b = 0; b < f->order(); ++b) {
                    CHECK(f->frobenius(f->add(a, b), m) == f->add(f->frobenius(a, m), f->frobenius(b, m)));
                    CHECK(f->frobenius(f->mul(a, b), m) == f->mul(f->frobenius(a, m), f->frobenius(b, m)));
                }
            }
    }
}

TEST_CASE("mixed fields are rejected")
{
    const auto a = GFElem::one(make_field(2, 1));
    const auto b = GFElem::one(make_field(3, 1));
    CHECK_THROWS_AS(a + b, UsageError);
    CHECK_THROWS_AS(gf_nullspace(make_field(2, 1), {{a, b}}, 2), UsageError);
}

TEST_CASE("nullspace over finite fields")
{
    const auto f2 = make_field(2, 1);
    CHECK(gf_nullspace(f2, {{GFElem::one(f2), GFElem::zero(f2)}, {GFElem::zero(f2), GFElem::one(f2)}}, 2).empty());
    const auto ones = gf_nullspace(f2, {{GFElem::one(f2), GFElem::one(f2)}}, 2);
    REQUIRE(ones.size() == 1);
    CHECK(ones[0][0] == GFElem::one(f2));
    CHECK(ones[0][1] == GFElem::one(f2));

    const auto f3 = make_field(3, 1);
    std::mt19937_64 rng(3);
    std::vector<GFVector> rows;
    while (true) {
        rows.assign(4, GFVector(6, GFElem::zero(f3)));
        for (auto& row : rows)
            for (auto& e : row)
                e = GFElem::from_integer(f3, static_cast<long long>(rng() % 3));
        if (gf_rank(f3, rows, 6) == 4)
            break;
    }
    const auto basis = gf_nullspace(f3, rows, 6);
    CHECK(basis.size() == 2);
    // Oracle: count solutions among all 3^6 vectors.
    std::size_t solutions = 0;
    for (int code = 0; code < 729; ++code) {
        GFVector v(6, GFElem::zero(f3));
        int rest = code;
        for (auto& e : v) {
            e = GFElem::from_integer(f3, rest % 3);
            rest /= 3;
        }
        bool zero = true;
        for (const auto& row : rows) {
            GFElem acc = GFElem::zero(f3);
            for (std::size_t j = 0; j < 6; ++j)
                acc += row[j] * v[j];
            zero = zero && acc.is_zero();
        }
        solutions += zero;
    }
    CHECK(solutions == 9);
    for (const auto& v : basis)
        for (const auto& row : rows) {
            GFElem acc = GFElem::zero(f3);
            for (std::size_t j = 0; j < 6; ++j)
                acc += row[j] * v[j];
            CHECK(acc.is_zero());
        }
}

TEST_CASE("polynomial expansion")
{
    const std::vector<std::string> xy = {"x", "y"};
    CHECK(MPoly::parse("(x+y)^2", xy, 2) == MPoly::parse("x^2 + y^2", xy, 2));
    const auto sq3 = MPoly::parse("(x+y)(x+y)", xy, 3);
    CHECK(sq3 == MPoly::parse("x^2 + 2*x*y + y^2", xy, 3));
    CHECK(sq3.to_string() == "x^2 + 2*x*y + y^2");
    CHECK(MPoly::parse("x - x", xy, 0).is_zero());
    CHECK(MPoly::parse("3x", xy, 3).is_zero());
    CHECK(MPoly::parse("-x", xy, 5).coefficient({1, 0}) == 4);
    CHECK_THROWS_AS(MPoly::parse("x + z", xy, 2), UsageError);
    CHECK_THROWS_AS(MPoly::parse("x + (y", xy, 2), UsageError);

    // Two routes to the same expansion give identical term maps.
    const auto a = MPoly::parse("(x+2y)^3 - (x-y)(x+y)x", xy, 0);
    const auto b = MPoly::parse("x^3 + 6x^2 y + 12 x y^2 + 8 y^3 - x^3 + x y^2", xy, 0);
    CHECK(a == b);
    CHECK(a.terms() == b.terms());
    CHECK(a.degree() == 3);
    CHECK(a.is_homogeneous());
}

TEST_CASE("polynomial substitution, reduction and evaluation")
{
    const std::vector<std::string> xy = {"x", "y"};
    const auto p = MPoly::parse("x y + 2", xy, 0);
    const auto sub = p.substitute({MPoly::parse("x + y", xy, 0), MPoly::parse("x", xy, 0)});
    CHECK(sub == MPoly::parse("x^2 + x y + 2", xy, 0));
    CHECK(p.reduced_mod(2) == MPoly::parse("x y", xy, 2));
    CHECK(MPoly::parse("x^5 y^4", xy, 2).reduce_exponents(4) == MPoly::parse("x^2 y", xy, 2));
    CHECK(p.evaluate(std::vector<BigInt>{3, 4}) == 14);
    const auto f5 = make_field(5, 1);
    CHECK(p.reduced_mod(5).evaluate({GFElem::from_integer(f5, 3), GFElem::from_integer(f5, 4)}) ==
          GFElem::from_integer(f5, 4));
    CHECK(MPoly(xy, 2).degree() == -1);
    CHECK(MPoly(xy, 2).to_string() == "0");
}
