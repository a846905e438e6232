#include "hexaform/complex/triangulation.hpp"

#include "hexaform/errors.hpp"

namespace hexaform::complex {

Triangulation orient(const Triangulation& t)
{
    if (t.size() == 0)
        throw OrientationError("cannot orient an empty complex");
    if (!t.is_connected())
        throw OrientationError("complex '" + t.name() + "' is disconnected");

    std::vector<std::vector<std::pair<std::size_t, int>>> neighbours(t.size());
    for (const auto& [tet, inc] : t.tetrahedron_incidence()) {
        if (inc.size() != 2)
            continue;
        // ε_a·(-1)^pos_a = -ε_b·(-1)^pos_b  ⇔  ε_b = relation·ε_a
        const int relation = ((inc[0].position + inc[1].position) % 2 ? 1 : -1);
        neighbours[inc[0].pentachoron].emplace_back(inc[1].pentachoron, relation);
        neighbours[inc[1].pentachoron].emplace_back(inc[0].pentachoron, relation);
    }

    std::vector<int> signs(t.size(), 0);
    signs[0] = 1;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        const auto a = stack.back();
        stack.pop_back();
        for (const auto& [b, relation] : neighbours[a]) {
            const int want = relation * signs[a];
            if (signs[b] == 0) {
                signs[b] = want;
                stack.push_back(b);
            } else if (signs[b] != want) {
                throw OrientationError("complex '" + t.name() + "' is not orientable");
            }
        }
    }
    return t.with_signs(std::move(signs));
}

} // namespace hexaform::complex
