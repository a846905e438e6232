#include "hexaform/hexagon/action.hpp"

namespace hexaform::hexagon {

using algebra::BigInt;
using algebra::GaloisField;
using algebra::GFElem;
using algebra::IntMatrix;

namespace {

template <class V, class Scale>
V second_line(const VariableLayout& layout, const Pentachoron& u, const std::vector<V>& latin,
              const std::vector<V>& greek, Scale scale)
{
    const auto f = layout.face_indices(u);
    auto x = [&](std::size_t k) { return latin[layout.x(f[k])]; };
    auto xi = [&](std::size_t k) { return greek[layout.x(f[k])]; };
    const V a = x(0) - scale(2, x(1)) + x(2) + x(3) - scale(2, x(4));
    const V b = xi(1) - xi(2) + xi(4);
    return a * b;
}

} // namespace

BigInt phi_second_line(const VariableLayout& layout, const Pentachoron& u, const std::vector<BigInt>& latin,
                       const std::vector<BigInt>& greek)
{
    return second_line(layout, u, latin, greek, [](int k, const BigInt& v) { return BigInt(k * v); });
}

GFElem phi_second_line(const VariableLayout& layout, const Pentachoron& u, const std::vector<GFElem>& latin,
                       const std::vector<GFElem>& greek)
{
    return second_line(layout, u, latin, greek,
                       [](int k, const GFElem& v) { return GFElem::from_integer(v.field(), k) * v; });
}

BigInt action_value(const Triangulation& t, const VariableLayout& layout, const std::vector<BigInt>& latin,
                    const std::vector<BigInt>& greek)
{
    return action_value(t, layout, latin, greek, [](const BigInt& a, const BigInt& b) { return BigInt(a * b); },
                        BigInt(0));
}

GFElem action_value(const Triangulation& t, const VariableLayout& layout, const std::vector<GFElem>& latin,
                    const std::vector<GFElem>& greek)
{
    const auto field = latin.empty() ? algebra::make_field(2, 1) : latin.front().field();
    return action_value(t, layout, latin, greek, [](const GFElem& a, const GFElem& b) { return a * b; },
                        GFElem::zero(field));
}

ActionFactors action_factors(const Triangulation& t, const IntegerPermittedSpace& space)
{
    const auto& layout = space.layout;
    ActionFactors out{IntMatrix(t.size(), space.dim()), IntMatrix(t.size(), space.dim())};
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto f = layout.face_indices(t.pentachora()[i]);
        for (std::size_t a = 0; a < space.dim(); ++a) {
            out.latin(i, a) = space.basis(layout.x(f[0]), a) + space.basis(layout.y(f[0]), a);
            out.greek(i, a) = space.basis(layout.x(f[4]), a) + space.basis(layout.y(f[4]), a);
        }
    }
    return out;
}

IntMatrix gram_matrix(const Triangulation& t, const IntegerPermittedSpace& space)
{
    const auto& signs = t.require_signs();
    const auto factors = action_factors(t, space);
    const std::size_t d = space.dim();
    IntMatrix g(d, d);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t a = 0; a < d; ++a) {
            const BigInt& la = factors.latin(i, a);
            if (la == 0)
                continue;
            for (std::size_t b = 0; b < d; ++b) {
                const BigInt& mb = factors.greek(i, b);
                if (mb == 0)
                    continue;
                if (signs[i] > 0)
                    g(a, b) += la * mb;
                else
                    g(a, b) -= la * mb;
            }
        }
    return g;
}

IntMatrix gram_matrix(const Triangulation& t)
{
    return gram_matrix(t, solve_permitted(build_constraints(t)));
}

std::vector<std::vector<GaloisField::Code>> gram_matrix(const Triangulation& t, const FieldPermittedSpace& space)
{
    const auto& signs = t.require_signs();
    const auto& f = *space.field;
    const auto& layout = space.layout;
    const std::size_t d = space.dim();
    std::vector<std::vector<GaloisField::Code>> g(d, std::vector<GaloisField::Code>(d, 0));
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto faces = layout.face_indices(t.pentachora()[i]);
        std::vector<GaloisField::Code> l(d), m(d);
        for (std::size_t a = 0; a < d; ++a) {
            const auto& v = space.basis[a];
            l[a] = f.add(v[layout.x(faces[0])], v[layout.y(faces[0])]);
            m[a] = f.add(v[layout.x(faces[4])], v[layout.y(faces[4])]);
            if (signs[i] < 0)
                l[a] = f.neg(l[a]);
        }
        for (std::size_t a = 0; a < d; ++a) {
            if (!l[a])
                continue;
            for (std::size_t b = 0; b < d; ++b)
                if (m[b])
                    g[a][b] = f.add(g[a][b], f.mul(l[a], m[b]));
        }
    }
    return g;
}

std::vector<GFElem> to_elements(const algebra::Field& f, const std::vector<GaloisField::Code>& v)
{
    std::vector<GFElem> out;
    out.reserve(v.size());
    for (auto c : v)
        out.emplace_back(f, c);
    return out;
}

} // namespace hexaform::hexagon
