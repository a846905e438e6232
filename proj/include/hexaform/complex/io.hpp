#pragma once

#include "hexaform/complex/triangulation.hpp"

#include <json.hpp>

#include <filesystem>

namespace hexaform::complex {

nlohmann::json to_json(const Triangulation& t);
/// MalformedInput naming the offending field and index.
Triangulation from_json(const nlohmann::json& doc);

/// Reads a triangulation file. MalformedInput on parse or field errors,
/// with the line number for JSON syntax errors.
Triangulation load(const std::filesystem::path& path);
void save(const Triangulation& t, const std::filesystem::path& path);

} // namespace hexaform::complex
