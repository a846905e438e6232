#include "hexaform/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using hexaform::cli::RunConfig;

void add_manifold_options(CLI::App* app, RunConfig& c)
{
    app->add_option("--manifold", c.manifold, "Builtin manifold: s4 or cp2")->check(CLI::IsMember({"s4", "cp2"}));
    app->add_option("--file", c.file, "Triangulation JSON file");
}

void add_field_options(CLI::App* app, RunConfig& c)
{
    app->add_option("--p", c.p, "Field characteristic");
    app->add_option("--n", c.n, "Extension degree");
    app->add_option("--m", c.m, "Frobenius exponent: xi = x^(p^m)");
    app->add_option("--m1", c.m1, "Double mode: x = c^(p^m1)");
    app->add_option("--m2", c.m2, "Double mode: xi = c^(p^m2)");
    app->add_option("--model", c.model, "Value model: field or tensor")->check(CLI::IsMember({"field", "tensor"}));
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig c;
    std::string cap;
    CLI::App app{"Hexagon-relation invariants of triangulated 4-manifolds"};
    app.require_subcommand(1);
    app.add_option("--out", c.out, "Write the report here instead of stdout");
    app.add_option("--cap", cap, "Enumeration cap (overrides HEXAFORM_CAP)");

    auto* invariant = app.add_subcommand("invariant", "Hexagon form invariants or value distribution");
    add_manifold_options(invariant, c);
    add_field_options(invariant, c);
    invariant->add_option("--mode", c.mode, "form or prob")->check(CLI::IsMember({"form", "prob"}));
    invariant->add_flag("--relabel", c.relabel, "Renumber vertices (seeded) first");
    invariant->add_option("--seed", c.seed, "Seed for --relabel");

    auto* verify = app.add_subcommand("verify", "Check invariance under Pachner moves");
    add_manifold_options(verify, c);
    add_field_options(verify, c);
    verify->add_option("--mode", c.mode, "form or prob")->check(CLI::IsMember({"form", "prob"}));
    verify->add_option("--script", c.script, "Comma-separated move kinds, e.g. 1-5,2-4,3-3");
    verify->add_option("--random", c.random, "Number of seeded random moves after the script");
    verify->add_option("--seed", c.seed, "Move selection seed");
    verify->add_flag("--relabel", c.relabel, "Finish with a seeded vertex renumbering");

    auto* frob = app.add_subcommand("frobenius", "Frobenius-specialized cocycle polynomials");
    frob->add_option("--p", c.p, "Characteristic");
    frob->add_option("--m", c.m, "xi = x^(p^m)");
    frob->add_option("--m1", c.m1, "x = c^(p^m1)");
    frob->add_option("--m2", c.m2, "xi = c^(p^m2)");
    frob->add_flag("--reference-cubic", c.reference_cubic, "The characteristic-2 cubic cocycle");

    auto* compare = app.add_subcommand("compare", "Hexagon form against the cup-product intersection form");
    add_manifold_options(compare, c);
    compare->add_option("--random", c.random, "Apply seeded random moves first");
    compare->add_option("--seed", c.seed, "Move selection seed");

    auto* manifold = app.add_subcommand("manifold", "Describe or save a triangulation");
    add_manifold_options(manifold, c);
    manifold->add_option("action", c.action, "info or save")->check(CLI::IsMember({"info", "save"}));

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : hexaform::cli::ExitCode::usage;
    }
    c.command = app.get_subcommands().front()->get_name();
    if (!cap.empty()) {
        try {
            c.cap = hexaform::algebra::BigInt(cap);
        } catch (const std::exception&) {
            std::cerr << "error: --cap is not a decimal integer\n";
            return hexaform::cli::ExitCode::usage;
        }
    }
    return hexaform::cli::run(c, std::cout, std::cerr);
}
