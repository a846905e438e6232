#pragma once

#include "hexaform/algebra/bigint.hpp"
#include "hexaform/complex/triangulation.hpp"

#include <json.hpp>

#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>

namespace hexaform::cli {

enum ExitCode : int { ok = 0, usage = 1, orientation = 2, cap = 3, move_not_found = 4, malformed = 5 };

struct RunConfig {
    std::string command;
    /// Builtin name; ignored when `file` is set.
    std::string manifold = "s4";
    std::optional<std::string> file;
    std::string mode = "form";
    std::uint32_t p = 2;
    std::uint32_t n = 1;
    std::optional<std::uint32_t> m;
    std::optional<std::uint32_t> m1;
    std::optional<std::uint32_t> m2;
    std::string model = "field";
    std::string script;
    unsigned random = 0;
    std::uint64_t seed = 0;
    std::optional<algebra::BigInt> cap;
    std::optional<std::string> out;
    bool reference_cubic = false;
    bool relabel = false;
    /// manifold subcommand: "info" or "save".
    std::string action = "info";
};

/// Loads the configured manifold, orienting it when the source has no signs.
complex::Triangulation load_manifold(const RunConfig& config);

nlohmann::json cmd_invariant(const RunConfig& config);
nlohmann::json cmd_verify(const RunConfig& config);
nlohmann::json cmd_compare(const RunConfig& config);
nlohmann::json cmd_manifold(const RunConfig& config);
/// Plain-text polynomial report; `json` receives the same content.
std::string cmd_frobenius(const RunConfig& config, nlohmann::json& json);

/// Runs config.command, writing the report to config.out or `out` and
/// diagnostics to `err`. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int exit_code_for(const std::exception& e);

/// Canonical report text: keys sorted, two-space indent, trailing newline.
std::string render(const nlohmann::json& report);

} // namespace hexaform::cli
