#include "hexaform/complex/builtin.hpp"

#include "hexaform/errors.hpp"

namespace hexaform::complex {

Triangulation boundary_delta5()
{
    std::vector<Pentachoron> facets;
    std::vector<int> signs;
    for (VertexId omit = 0; omit < 6; ++omit) {
        std::array<VertexId, 5> v{};
        std::size_t j = 0;
        for (VertexId x = 0; x < 6; ++x)
            if (x != omit)
                v[j++] = x;
        facets.emplace_back(v);
        signs.push_back(omit % 2 ? -1 : 1);
    }
    return Triangulation("s4", std::move(facets), std::move(signs));
}

Triangulation cp2_kuhnel9()
{
    // ℤ₃²-symmetric on the affine plane AG(2,3), vertex 3a+b ↔ (a,b).
    static constexpr VertexId table[36][5] = {
        {0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 4, 5}, {0, 1, 3, 4, 6}, {0, 1, 3, 5, 7}, {0, 1, 3, 6, 7},
        {0, 1, 4, 5, 6}, {0, 1, 5, 6, 8}, {0, 1, 5, 7, 8}, {0, 1, 6, 7, 8}, {0, 2, 3, 4, 8}, {0, 2, 3, 5, 8},
        {0, 2, 4, 5, 6}, {0, 2, 4, 6, 7}, {0, 2, 4, 7, 8}, {0, 2, 5, 6, 8}, {0, 2, 6, 7, 8}, {0, 3, 4, 6, 7},
        {0, 3, 4, 7, 8}, {0, 3, 5, 7, 8}, {1, 2, 3, 4, 8}, {1, 2, 3, 5, 7}, {1, 2, 3, 6, 7}, {1, 2, 3, 6, 8},
        {1, 2, 4, 5, 7}, {1, 2, 4, 7, 8}, {1, 2, 6, 7, 8}, {1, 3, 4, 6, 8}, {1, 4, 5, 6, 8}, {1, 4, 5, 7, 8},
        {2, 3, 5, 6, 7}, {2, 3, 5, 6, 8}, {2, 4, 5, 6, 7}, {3, 4, 5, 6, 7}, {3, 4, 5, 6, 8}, {3, 4, 5, 7, 8},
    };
    std::vector<Pentachoron> facets;
    for (const auto& row : table)
        facets.emplace_back(std::array<VertexId, 5>{row[0], row[1], row[2], row[3], row[4]});
    return orient(Triangulation("cp2", std::move(facets)));
}

Triangulation single_pentachoron()
{
    return Triangulation("ball", {Pentachoron({0, 1, 2, 3, 4})}, std::vector<int>{1});
}

Triangulation builtin(std::string_view name)
{
    if (name == "s4")
        return boundary_delta5();
    if (name == "cp2")
        return cp2_kuhnel9();
    throw UsageError("unknown builtin manifold '" + std::string(name) + "' (expected s4 or cp2)");
}

} // namespace hexaform::complex
