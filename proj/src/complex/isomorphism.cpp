#include "hexaform/complex/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hexaform::complex {

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Triangulation& a, const Triangulation& b)
{
    if (a.size() != b.size())
        return std::nullopt;
    const auto va = a.vertex_ids();
    const auto vb = b.vertex_ids();
    if (va.size() != vb.size())
        return std::nullopt;

    std::map<VertexId, std::size_t> deg_a, deg_b;
    for (const auto& u : a.pentachora())
        for (auto x : u.v)
            ++deg_a[x];
    for (const auto& u : b.pentachora())
        for (auto x : u.v)
            ++deg_b[x];

    // Greedy order: each next vertex shares the most pentachora with those
    // already placed, so facet checks fire early.
    std::vector<VertexId> order;
    std::set<VertexId> placed;
    while (order.size() < va.size()) {
        VertexId best = 0;
        long best_score = -1;
        for (auto x : va) {
            if (placed.count(x))
                continue;
            long score = 0;
            for (const auto& u : a.pentachora())
                if (u.contains(x))
                    for (auto y : u.v)
                        if (placed.count(y))
                            ++score;
            score = score * 1000 + static_cast<long>(deg_a[x]);
            if (score > best_score) {
                best_score = score;
                best = x;
            }
        }
        order.push_back(best);
        placed.insert(best);
    }
    std::map<VertexId, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[order[i]] = i;

    // Facets of a grouped by the step at which they become fully mapped.
    std::vector<std::vector<const Pentachoron*>> closing(order.size());
    for (const auto& u : a.pentachora()) {
        std::size_t last = 0;
        for (auto x : u.v)
            last = std::max(last, rank[x]);
        closing[last].push_back(&u);
    }

    const std::set<Pentachoron> target(b.pentachora().begin(), b.pentachora().end());
    std::map<VertexId, VertexId> mapping;
    std::set<VertexId> used;

    std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
        if (k == order.size())
            return true;
        const VertexId x = order[k];
        for (auto y : vb) {
            if (used.count(y) || deg_b[y] != deg_a[x])
                continue;
            mapping[x] = y;
            used.insert(y);
            bool ok = true;
            for (const auto* u : closing[k]) {
                std::array<VertexId, 5> img{};
                for (std::size_t i = 0; i < 5; ++i)
                    img[i] = mapping[u->v[i]];
                if (!target.count(Pentachoron::from_unsorted(img))) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(k + 1))
                return true;
            used.erase(y);
            mapping.erase(x);
        }
        return false;
    };
    if (!extend(0))
        return std::nullopt;
    return mapping;
}

} // namespace hexaform::complex
