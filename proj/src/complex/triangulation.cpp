#include "hexaform/complex/triangulation.hpp"

#include "hexaform/errors.hpp"

#include <algorithm>
#include <set>

namespace hexaform::complex {

Triangulation::Triangulation(std::string name, std::vector<Pentachoron> pentachora,
                             std::optional<std::vector<int>> signs)
    : name_(std::move(name)), pentachora_(std::move(pentachora)), signs_(std::move(signs))
{
    std::set<Pentachoron> seen;
    for (const auto& u : pentachora_)
        if (!seen.insert(u).second)
            throw MalformedInput("duplicate pentachoron " + to_string(u));
    for (const auto& [t, inc] : tetrahedron_incidence())
        if (inc.size() > 2)
            throw MalformedInput("tetrahedron " + to_string(t) + " lies in more than two pentachora");
    if (signs_) {
        if (signs_->size() != pentachora_.size())
            throw MalformedInput("sign count does not match pentachoron count");
        for (int s : *signs_)
            if (s != 1 && s != -1)
                throw MalformedInput("orientation signs must be +1 or -1");
        if (!is_coherent(*this, *signs_))
            throw OrientationError("orientation signs are not coherent");
    }
}

const std::vector<int>& Triangulation::require_signs() const
{
    if (!signs_)
        throw OrientationError("triangulation '" + name_ + "' is not oriented");
    return *signs_;
}

std::vector<VertexId> Triangulation::vertex_ids() const
{
    std::set<VertexId> ids;
    for (const auto& u : pentachora_)
        ids.insert(u.v.begin(), u.v.end());
    return {ids.begin(), ids.end()};
}

std::vector<std::pair<VertexId, VertexId>> Triangulation::edges() const
{
    std::set<std::pair<VertexId, VertexId>> out;
    for (const auto& u : pentachora_)
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a + 1; b < 5; ++b)
                out.emplace(u.v[a], u.v[b]);
    return {out.begin(), out.end()};
}

std::vector<Triangle> Triangulation::triangles() const
{
    std::set<Triangle> out;
    for (const auto& u : pentachora_)
        for (const auto& s : complex::triangles(u))
            out.insert(s);
    return {out.begin(), out.end()};
}

std::vector<Tetrahedron> Triangulation::tetrahedra() const
{
    std::set<Tetrahedron> out;
    for (const auto& u : pentachora_)
        for (const auto& t : faces(u))
            out.insert(t);
    return {out.begin(), out.end()};
}

std::map<Tetrahedron, std::vector<FaceIncidence>> Triangulation::tetrahedron_incidence() const
{
    std::map<Tetrahedron, std::vector<FaceIncidence>> out;
    for (std::size_t i = 0; i < pentachora_.size(); ++i) {
        const auto fs = faces(pentachora_[i]);
        for (std::size_t pos = 0; pos < 5; ++pos)
            out[fs[pos]].push_back({i, pos});
    }
    return out;
}

bool Triangulation::is_closed() const
{
    if (pentachora_.empty())
        return false;
    for (const auto& [t, inc] : tetrahedron_incidence())
        if (inc.size() != 2)
            return false;
    return true;
}

bool Triangulation::is_connected() const
{
    if (pentachora_.empty())
        return false;
    std::vector<std::vector<std::size_t>> adjacent(pentachora_.size());
    for (const auto& [t, inc] : tetrahedron_incidence())
        if (inc.size() == 2) {
            adjacent[inc[0].pentachoron].push_back(inc[1].pentachoron);
            adjacent[inc[1].pentachoron].push_back(inc[0].pentachoron);
        }
    std::vector<bool> seen(pentachora_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto a = stack.back();
        stack.pop_back();
        for (auto b : adjacent[a])
            if (!seen[b]) {
                seen[b] = true;
                ++count;
                stack.push_back(b);
            }
    }
    return count == pentachora_.size();
}

long long Triangulation::euler_characteristic() const
{
    return static_cast<long long>(vertex_count()) - static_cast<long long>(edges().size())
         + static_cast<long long>(triangles().size()) - static_cast<long long>(tetrahedra().size())
         + static_cast<long long>(pentachora_.size());
}

Triangulation Triangulation::with_signs(std::vector<int> signs) const
{
    return Triangulation(name_, pentachora_, std::move(signs));
}

Triangulation Triangulation::without_signs() const { return Triangulation(name_, pentachora_); }

Triangulation Triangulation::renamed(std::string name) const
{
    Triangulation out = *this;
    out.name_ = std::move(name);
    return out;
}

bool is_coherent(const Triangulation& t, const std::vector<int>& signs)
{
    if (signs.size() != t.size())
        return false;
    for (const auto& [tet, inc] : t.tetrahedron_incidence()) {
        if (inc.size() != 2)
            continue;
        const int a = signs[inc[0].pentachoron] * (inc[0].position % 2 ? -1 : 1);
        const int b = signs[inc[1].pentachoron] * (inc[1].position % 2 ? -1 : 1);
        if (a != -b)
            return false;
    }
    return true;
}

Triangulation relabel(const Triangulation& t, const std::map<VertexId, VertexId>& relabeling)
{
    std::set<VertexId> images;
    for (const auto& [from, to] : relabeling)
        if (!images.insert(to).second)
            throw UsageError("relabel: map is not injective");
    std::vector<Pentachoron> out;
    std::vector<int> parity;
    out.reserve(t.size());
    for (const auto& u : t.pentachora()) {
        std::vector<VertexId> mapped;
        for (auto x : u.v) {
            const auto it = relabeling.find(x);
            if (it == relabeling.end())
                throw UsageError("relabel: vertex " + std::to_string(x) + " has no image");
            mapped.push_back(it->second);
        }
        parity.push_back(sort_parity(mapped));
        std::array<VertexId, 5> arr{};
        std::copy(mapped.begin(), mapped.end(), arr.begin());
        out.push_back(Pentachoron::from_unsorted(arr));
    }
    if (!t.oriented())
        return Triangulation(t.name(), std::move(out));
    std::vector<int> signs = *t.signs();
    for (std::size_t i = 0; i < signs.size(); ++i)
        signs[i] *= parity[i];
    return Triangulation(t.name(), std::move(out), std::move(signs));
}

} // namespace hexaform::complex
