#include "hexaform/complex/io.hpp"

#include "hexaform/errors.hpp"

#include <fstream>

namespace hexaform::complex {

using nlohmann::json;

json to_json(const Triangulation& t)
{
    json doc;
    doc["name"] = t.name();
    doc["vertices"] = t.vertex_count();
    json rows = json::array();
    for (const auto& u : t.pentachora())
        rows.push_back(json(std::vector<VertexId>(u.v.begin(), u.v.end())));
    doc["pentachora"] = rows;
    if (t.oriented())
        doc["signs"] = *t.signs();
    return doc;
}

namespace {

long long as_integer(const json& value, const std::string& where)
{
    if (!value.is_number_integer())
        throw MalformedInput(where + ": expected an integer");
    return value.get<long long>();
}

} // namespace

Triangulation from_json(const json& doc)
{
    if (!doc.is_object())
        throw MalformedInput("triangulation: expected a JSON object");
    std::string name = "unnamed";
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw MalformedInput("name: expected a string");
        name = doc["name"].get<std::string>();
    }
    if (!doc.contains("pentachora") || !doc["pentachora"].is_array())
        throw MalformedInput("pentachora: missing or not an array");

    std::vector<Pentachoron> pentachora;
    const auto& rows = doc["pentachora"];
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string where = "pentachora[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != 5)
            throw MalformedInput(where + ": expected 5 vertex ids");
        std::array<VertexId, 5> v{};
        for (std::size_t j = 0; j < 5; ++j) {
            const auto x = as_integer(rows[i][j], where + "[" + std::to_string(j) + "]");
            if (x < 0 || x > 0x7fffffff)
                throw MalformedInput(where + ": vertex id out of range");
            v[j] = static_cast<VertexId>(x);
        }
        for (std::size_t j = 1; j < 5; ++j) {
            if (v[j] == v[j - 1])
                throw MalformedInput(where + ": repeated vertex " + std::to_string(v[j]));
            if (v[j] < v[j - 1])
                throw MalformedInput(where + ": vertices must be strictly increasing");
        }
        pentachora.emplace_back(v);
    }

    std::optional<std::vector<int>> signs;
    if (doc.contains("signs") && !doc["signs"].is_null()) {
        if (!doc["signs"].is_array())
            throw MalformedInput("signs: expected an array");
        std::vector<int> s;
        for (std::size_t i = 0; i < doc["signs"].size(); ++i)
            s.push_back(static_cast<int>(as_integer(doc["signs"][i], "signs[" + std::to_string(i) + "]")));
        signs = std::move(s);
    }

    Triangulation t(std::move(name), std::move(pentachora), std::move(signs));
    if (doc.contains("vertices")) {
        const auto count = as_integer(doc["vertices"], "vertices");
        if (count != static_cast<long long>(t.vertex_count()))
            throw MalformedInput("vertices: declared " + std::to_string(count) + " but pentachora use "
                                 + std::to_string(t.vertex_count()));
    }
    return t;
}

Triangulation load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw MalformedInput("cannot open '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw MalformedInput(path.string() + ": " + e.what());
    }
    try {
        return from_json(doc);
    } catch (const MalformedInput& e) {
        throw MalformedInput(path.string() + ": " + e.what());
    }
}

void save(const Triangulation& t, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write '" + path.string() + "'");
    // Keys sorted like every other report; one pentachoron per line.
    const auto doc = to_json(t);
    out << "{\n  \"name\": " << doc["name"].dump() << ",\n  \"pentachora\": [\n";
    const auto& rows = doc["pentachora"];
    for (std::size_t i = 0; i < rows.size(); ++i)
        out << "    " << rows[i].dump() << (i + 1 < rows.size() ? ",\n" : "\n");
    out << "  ],\n";
    if (doc.contains("signs"))
        out << "  \"signs\": " << doc["signs"].dump() << ",\n";
    out << "  \"vertices\": " << doc["vertices"].dump() << "\n}\n";
}

} // namespace hexaform::complex
