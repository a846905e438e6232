#include "hexaform/complex/pachner.hpp"

#include "hexaform/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hexaform::complex {

int removed_count(MoveKind kind)
{
    switch (kind) {
    case MoveKind::k1_5: return 1;
    case MoveKind::k2_4: return 2;
    case MoveKind::k3_3: return 3;
    case MoveKind::k4_2: return 4;
    case MoveKind::k5_1: return 5;
    }
    return 0;
}

std::string to_string(MoveKind kind)
{
    const int k = removed_count(kind);
    return std::to_string(k) + "-" + std::to_string(6 - k);
}

MoveKind parse_move_kind(std::string_view text)
{
    if (text == "1-5") return MoveKind::k1_5;
    if (text == "2-4") return MoveKind::k2_4;
    if (text == "3-3") return MoveKind::k3_3;
    if (text == "4-2") return MoveKind::k4_2;
    if (text == "5-1") return MoveKind::k5_1;
    throw UsageError("unknown move kind '" + std::string(text) + "'");
}

MoveKind inverse(MoveKind kind)
{
    switch (kind) {
    case MoveKind::k1_5: return MoveKind::k5_1;
    case MoveKind::k2_4: return MoveKind::k4_2;
    case MoveKind::k3_3: return MoveKind::k3_3;
    case MoveKind::k4_2: return MoveKind::k2_4;
    case MoveKind::k5_1: return MoveKind::k1_5;
    }
    return kind;
}

std::vector<MoveKind> parse_move_script(std::string_view text)
{
    std::vector<MoveKind> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto piece = text.substr(start, end - start);
        while (!piece.empty() && piece.front() == ' ')
            piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ')
            piece.remove_suffix(1);
        if (!piece.empty())
            out.push_back(parse_move_kind(piece));
        start = end + 1;
    }
    return out;
}

std::string to_string(const MoveDescriptor& d)
{
    std::ostringstream os;
    os << to_string(d.kind) << " on {";
    for (std::size_t i = 0; i < 6; ++i)
        os << (i ? "," : "") << d.six_vertices[i];
    os << "} replacing [";
    for (std::size_t i = 0; i < d.target.size(); ++i)
        os << (i ? "," : "") << d.target[i];
    os << ']';
    return os.str();
}

namespace {

bool pentachoron_contains_all(const Pentachoron& u, const std::vector<VertexId>& vs)
{
    return std::all_of(vs.begin(), vs.end(), [&](VertexId x) { return u.contains(x); });
}

std::vector<std::size_t> star(const Triangulation& t, const std::vector<VertexId>& sigma)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (pentachoron_contains_all(t.pentachora()[i], sigma))
            out.push_back(i);
    return out;
}

bool is_face_of_complex(const Triangulation& t, const std::vector<VertexId>& sigma)
{
    return std::any_of(t.pentachora().begin(), t.pentachora().end(),
                       [&](const Pentachoron& u) { return pentachoron_contains_all(u, sigma); });
}

// Vertex of `six` missing from facet u.
VertexId omitted_vertex(const std::array<VertexId, 6>& six, const Pentachoron& u)
{
    for (auto x : six)
        if (!u.contains(x))
            return x;
    throw MoveError("facet does not lie in the supporting simplex");
}

std::size_t position_in(const std::array<VertexId, 6>& six, VertexId x)
{
    return static_cast<std::size_t>(std::find(six.begin(), six.end(), x) - six.begin());
}

Pentachoron facet_without(const std::array<VertexId, 6>& six, VertexId drop)
{
    std::array<VertexId, 5> out{};
    std::size_t j = 0;
    for (auto x : six)
        if (x != drop)
            out[j++] = x;
    return Pentachoron(out);
}

// All (6-k)-vertex faces of the complex, ascending.
std::set<std::vector<VertexId>> faces_of_size(const Triangulation& t, std::size_t size)
{
    std::set<std::vector<VertexId>> out;
    for (const auto& u : t.pentachora()) {
        std::vector<bool> pick(5, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            std::vector<VertexId> f;
            for (std::size_t i = 0; i < 5; ++i)
                if (pick[i])
                    f.push_back(u.v[i]);
            out.insert(f);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

} // namespace

std::vector<MoveDescriptor> find_moves(const Triangulation& t, MoveKind kind)
{
    std::vector<MoveDescriptor> out;
    const int k = removed_count(kind);
    if (t.size() == 0)
        return out;

    if (kind == MoveKind::k1_5) {
        const auto ids = t.vertex_ids();
        const VertexId fresh = ids.back() + 1;
        for (std::size_t i = 0; i < t.size(); ++i) {
            MoveDescriptor d{kind, {i}, {}};
            std::array<VertexId, 6> six{};
            std::copy(t.pentachora()[i].v.begin(), t.pentachora()[i].v.end(), six.begin());
            six[5] = fresh;
            d.six_vertices = six;
            out.push_back(d);
        }
        return out;
    }

    for (const auto& sigma : faces_of_size(t, static_cast<std::size_t>(6 - k))) {
        const auto st = star(t, sigma);
        if (st.size() != static_cast<std::size_t>(k))
            continue;
        std::set<VertexId> support;
        for (auto i : st)
            support.insert(t.pentachora()[i].v.begin(), t.pentachora()[i].v.end());
        if (support.size() != 6)
            continue;
        std::vector<VertexId> fresh_face;
        for (auto x : support)
            if (std::find(sigma.begin(), sigma.end(), x) == sigma.end())
                fresh_face.push_back(x);
        if (is_face_of_complex(t, fresh_face))
            continue;
        MoveDescriptor d{kind, st, {}};
        std::copy(support.begin(), support.end(), d.six_vertices.begin());
        out.push_back(d);
    }
    return out;
}

void validate_move(const Triangulation& t, const MoveDescriptor& d)
{
    const auto k = static_cast<std::size_t>(removed_count(d.kind));
    if (d.target.size() != k)
        throw MoveError("configuration not found: " + to_string(d.kind) + " needs " + std::to_string(k)
                        + " target pentachora");
    std::set<std::size_t> distinct(d.target.begin(), d.target.end());
    if (distinct.size() != k)
        throw MoveError("configuration not found: repeated target pentachoron");
    for (auto i : d.target)
        if (i >= t.size())
            throw MoveError("configuration not found: target index out of range");
    for (std::size_t i = 1; i < 6; ++i)
        if (d.six_vertices[i - 1] >= d.six_vertices[i])
            throw MoveError("configuration not found: support vertices must be strictly increasing");

    std::set<VertexId> omitted;
    for (auto i : d.target) {
        const auto& u = t.pentachora()[i];
        for (auto x : u.v)
            if (std::find(d.six_vertices.begin(), d.six_vertices.end(), x) == d.six_vertices.end())
                throw MoveError("configuration not found: pentachoron " + to_string(u)
                                + " is not a facet of the supporting simplex");
        omitted.insert(omitted_vertex(d.six_vertices, u));
    }

    if (d.kind == MoveKind::k1_5) {
        const VertexId fresh = *omitted.begin();
        const auto ids = t.vertex_ids();
        if (std::binary_search(ids.begin(), ids.end(), fresh))
            throw MoveError("stale vertex id " + std::to_string(fresh) + " for 1-5 move");
        return;
    }

    std::vector<VertexId> old_core;
    for (auto x : d.six_vertices)
        if (!omitted.count(x))
            old_core.push_back(x);
    const auto st = star(t, old_core);
    if (std::set<std::size_t>(st.begin(), st.end()) != distinct)
        throw MoveError("link condition violated: the removed simplex has a star other than the targets");
    const std::vector<VertexId> new_core(omitted.begin(), omitted.end());
    if (is_face_of_complex(t, new_core))
        throw MoveError("link condition violated: the inserted simplex already exists");
}

Triangulation apply_move(const Triangulation& t, const MoveDescriptor& d)
{
    validate_move(t, d);
    const auto& six = d.six_vertices;

    std::set<std::size_t> removed(d.target.begin(), d.target.end());
    std::set<VertexId> omitted;
    for (auto i : d.target)
        omitted.insert(omitted_vertex(six, t.pentachora()[i]));

    std::vector<Pentachoron> out;
    std::vector<int> signs;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!removed.count(i)) {
            out.push_back(t.pentachora()[i]);
            if (t.oriented())
                signs.push_back((*t.signs())[i]);
        }

    // In ∂Δ⁵ the facet omitting position j carries (-1)^j; the new facets
    // take the opposite hemisphere's signs so both balls induce the same
    // boundary orientation.
    int scale = 0;
    if (t.oriented()) {
        const std::size_t first = d.target.front();
        const auto pos = position_in(six, omitted_vertex(six, t.pentachora()[first]));
        scale = (*t.signs())[first] * (pos % 2 ? -1 : 1);
    }
    std::vector<std::pair<Pentachoron, int>> fresh;
    for (auto x : six) {
        if (omitted.count(x))
            continue;
        const auto pos = position_in(six, x);
        fresh.emplace_back(facet_without(six, x), -scale * (pos % 2 ? -1 : 1));
    }
    std::sort(fresh.begin(), fresh.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [u, s] : fresh) {
        out.push_back(u);
        if (t.oriented())
            signs.push_back(s);
    }

    std::optional<std::vector<int>> maybe_signs;
    if (t.oriented())
        maybe_signs = std::move(signs);
    Triangulation result(t.name(), std::move(out), std::move(maybe_signs));

    if (d.kind == MoveKind::k5_1) {
        VertexId gone = 0;
        for (auto x : six)
            if (!omitted.count(x))
                gone = x;
        std::map<VertexId, VertexId> shift;
        for (auto x : result.vertex_ids())
            shift[x] = x > gone ? x - 1 : x;
        result = relabel(result, shift);
    }
    return result;
}

MoveDescriptor MovePicker::pick(const Triangulation& t)
{
    std::vector<std::vector<MoveDescriptor>> by_kind;
    for (auto kind : {MoveKind::k1_5, MoveKind::k2_4, MoveKind::k3_3, MoveKind::k4_2, MoveKind::k5_1}) {
        auto c = find_moves(t, kind);
        if (!c.empty())
            by_kind.push_back(std::move(c));
    }
    if (by_kind.empty())
        throw MoveNotFound("no Pachner move applies to '" + t.name() + "'");
    const auto& chosen = by_kind[below(by_kind.size())];
    return chosen[below(chosen.size())];
}

MoveDescriptor MovePicker::pick(const Triangulation& t, MoveKind kind)
{
    const auto c = find_moves(t, kind);
    if (c.empty())
        throw MoveNotFound("no " + to_string(kind) + " move applies to '" + t.name() + "'");
    return c[below(c.size())];
}

} // namespace hexaform::complex
