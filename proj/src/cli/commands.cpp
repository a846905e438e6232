#include "hexaform/cli/commands.hpp"

#include "hexaform/complex/builtin.hpp"
#include "hexaform/complex/io.hpp"
#include "hexaform/complex/pachner.hpp"
#include "hexaform/errors.hpp"
#include "hexaform/frobenius/cocycle_polynomial.hpp"
#include "hexaform/hexagon/action.hpp"
#include "hexaform/intersect/compare.hpp"
#include "hexaform/invariants/distribution.hpp"
#include "hexaform/invariants/serialize.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace hexaform::cli {

using nlohmann::json;

namespace {

algebra::BigInt effective_cap(const RunConfig& c) { return c.cap ? *c.cap : invariants::default_cap(); }

invariants::FrobeniusSpec frobenius_spec(const RunConfig& c)
{
    if (c.m1 || c.m2) {
        if (c.m)
            throw UsageError("give either --m or --m1/--m2, not both");
        if (!c.m1 || !c.m2)
            throw UsageError("double Frobenius mode needs both --m1 and --m2");
        return invariants::FrobeniusSpec::doubled(c.p, c.n, *c.m1, *c.m2);
    }
    return invariants::FrobeniusSpec::single(c.p, c.n, c.m.value_or(0));
}

void validate_field(const RunConfig& c)
{
    if (!algebra::is_prime(c.p))
        throw InvalidPrime("--p " + std::to_string(c.p) + " is not prime");
    if (c.n < 1)
        throw UsageError("--n must be at least 1");
}

complex::Triangulation relabeled(const complex::Triangulation& t, std::uint64_t seed)
{
    auto ids = t.vertex_ids();
    auto images = ids;
    std::mt19937_64 engine(seed);
    for (std::size_t i = images.size(); i > 1; --i)
        std::swap(images[i - 1], images[engine() % i]);
    std::map<complex::VertexId, complex::VertexId> map;
    for (std::size_t i = 0; i < ids.size(); ++i)
        map[ids[i]] = images[i];
    return complex::relabel(t, map);
}

struct Measurement {
    json report;
    std::size_t dim = 0;
    std::optional<invariants::FormInvariants> form;
    std::optional<invariants::ValueDistribution> distribution;
};

Measurement measure(const complex::Triangulation& t, const RunConfig& c)
{
    Measurement m;
    if (c.mode == "form") {
        auto g = hexagon::gram_matrix(t);
        if (!g.is_symmetric())
            throw UsageError("hexagon form of '" + t.name() + "' is not symmetric (complex not closed?)");
        m.form = invariants::form_invariants(g);
        m.dim = m.form->total_dim;
        m.report = invariants::to_json(*m.form);
    } else if (c.mode == "prob") {
        invariants::EnumerationOptions options;
        options.cap = effective_cap(c);
        m.distribution = invariants::probability_distribution(t, frobenius_spec(c),
                                                              invariants::parse_value_model(c.model), options);
        m.dim = invariants::permitted_dimension(t, c.p);
        m.report = invariants::to_json(*m.distribution);
    } else {
        throw UsageError("unknown --mode '" + c.mode + "' (expected form or prob)");
    }
    return m;
}

bool same_invariant(const Measurement& a, const Measurement& b)
{
    if (a.form)
        return invariants::same_nondegenerate_part(*a.form, *b.form);
    return invariants::distribution_equal(*a.distribution, *b.distribution).equal;
}

int expected_shift(complex::MoveKind k)
{
    switch (k) {
    case complex::MoveKind::k1_5: return 4;
    case complex::MoveKind::k2_4: return 1;
    case complex::MoveKind::k3_3: return 0;
    case complex::MoveKind::k4_2: return -1;
    case complex::MoveKind::k5_1: return -4;
    }
    return 0;
}

json source_json(const RunConfig& c)
{
    return c.file ? json{{"file", *c.file}} : json{{"builtin", c.manifold}};
}

} // namespace

complex::Triangulation load_manifold(const RunConfig& config)
{
    auto t = config.file ? complex::load(*config.file) : complex::builtin(config.manifold);
    if (!t.oriented())
        t = complex::orient(t);
    return t;
}

json cmd_invariant(const RunConfig& config)
{
    if (config.mode == "prob")
        validate_field(config);
    auto t = load_manifold(config);
    if (config.relabel)
        t = relabeled(t, config.seed);
    json report;
    report["command"] = "invariant";
    report["manifold"] = t.name();
    report["source"] = source_json(config);
    report["mode"] = config.mode;
    if (config.relabel)
        report["relabel_seed"] = config.seed;
    const auto m = measure(t, config);
    report[config.mode == "form" ? "form" : "distribution"] = m.report;
    return report;
}

json cmd_verify(const RunConfig& config)
{
    if (config.mode == "prob")
        validate_field(config);
    auto kinds = complex::parse_move_script(config.script);
    if (kinds.empty() && config.random == 0 && !config.relabel)
        throw UsageError("verify needs --script, --random or --relabel");
    auto t = load_manifold(config);
    const auto base = measure(t, config);

    json steps = json::array();
    bool all_equal = true;
    bool shifts_ok = true;
    complex::MovePicker picker(config.seed);
    std::size_t previous_dim = base.dim;
    auto record = [&](const complex::Triangulation& next, json step, std::optional<int> expected) {
        const auto m = measure(next, config);
        const bool equal = same_invariant(base, m);
        step["pentachora"] = next.size();
        step["vertices"] = next.vertex_count();
        step["dim"] = m.dim;
        step["dim_shift"] = static_cast<long long>(m.dim) - static_cast<long long>(previous_dim);
        step["equal"] = equal;
        if (expected) {
            step["expected_shift"] = *expected;
            const bool shift_ok = static_cast<long long>(m.dim) - static_cast<long long>(previous_dim) == *expected;
            step["shift_ok"] = shift_ok;
            shifts_ok = shifts_ok && shift_ok;
        }
        all_equal = all_equal && equal;
        previous_dim = m.dim;
        steps.push_back(step);
    };

    const std::size_t total = kinds.size() + config.random;
    for (std::size_t i = 0; i < total; ++i) {
        const auto move = i < kinds.size() ? picker.pick(t, kinds[i]) : picker.pick(t);
        t = complex::apply_move(t, move);
        record(t, {{"move", complex::to_string(move.kind)}, {"descriptor", complex::to_string(move)}},
               expected_shift(move.kind));
    }
    if (config.relabel)
        record(relabeled(t, config.seed), {{"move", "relabel"}}, 0);

    json report;
    report["command"] = "verify";
    report["manifold"] = t.name();
    report["source"] = source_json(config);
    report["mode"] = config.mode;
    report["seed"] = config.seed;
    report["script"] = config.script;
    report["random"] = config.random;
    report["initial"] = base.report;
    report["initial_dim"] = base.dim;
    report["steps"] = steps;
    report["all_equal"] = all_equal;
    report["shifts_ok"] = shifts_ok;
    return report;
}

json cmd_compare(const RunConfig& config)
{
    auto t = load_manifold(config);
    if (config.random) {
        complex::MovePicker picker(config.seed);
        for (unsigned i = 0; i < config.random; ++i)
            t = complex::apply_move(t, picker.pick(t));
    }
    auto report = intersect::to_json(intersect::compare_forms(t));
    report["command"] = "compare";
    report["source"] = source_json(config);
    if (config.random) {
        report["random"] = config.random;
        report["seed"] = config.seed;
    }
    return report;
}

json cmd_manifold(const RunConfig& config)
{
    auto raw = config.file ? complex::load(*config.file) : complex::builtin(config.manifold);
    if (config.action == "save") {
        if (!config.out)
            throw UsageError("manifold save needs --out");
        complex::save(raw.oriented() ? raw : complex::orient(raw), *config.out);
        return {};
    }
    if (config.action != "info")
        throw UsageError("unknown manifold action '" + config.action + "' (expected info or save)");
    json report;
    report["command"] = "manifold";
    report["name"] = raw.name();
    report["vertices"] = raw.vertex_count();
    report["edges"] = raw.edges().size();
    report["triangles"] = raw.triangles().size();
    report["tetrahedra"] = raw.tetrahedra().size();
    report["pentachora"] = raw.size();
    report["euler_characteristic"] = raw.euler_characteristic();
    report["closed"] = raw.is_closed();
    report["connected"] = raw.is_connected();
    bool orientable = raw.oriented();
    if (!orientable) {
        try {
            complex::orient(raw);
            orientable = true;
        } catch (const OrientationError&) {
        }
    }
    report["orientable"] = orientable;
    report["oriented"] = raw.oriented();
    return report;
}

std::string cmd_frobenius(const RunConfig& config, json& report)
{
    frobenius::CocyclePolynomial poly;
    std::string label;
    if (config.reference_cubic) {
        poly = frobenius::reference_cubic();
        label = "reference cubic";
    } else if (config.m1 || config.m2) {
        if (!config.m1 || !config.m2)
            throw UsageError("double specialization needs both --m1 and --m2");
        poly = frobenius::specialize_double(config.p, *config.m1, *config.m2);
        label = "double(p=" + std::to_string(config.p) + ",m1=" + std::to_string(*config.m1)
              + ",m2=" + std::to_string(*config.m2) + ")";
    } else {
        poly = frobenius::specialize(config.p, config.m.value_or(0));
        label = "single(p=" + std::to_string(config.p) + ",m=" + std::to_string(config.m.value_or(0)) + ")";
    }
    std::ostringstream os;
    os << poly.to_string() << '\n';
    os << "degree: " << poly.degree() << '\n';
    report = {{"command", "frobenius"}, {"polynomial", poly.to_string()}, {"degree", poly.degree()},
              {"p", poly.p}, {"specialization", label}};
    try {
        const bool holds = frobenius::is_hexagon_cocycle(poly, algebra::make_field(poly.p, 1), effective_cap(config));
        os << "cocycle: " << (holds ? "true" : "false") << '\n';
        report["cocycle"] = holds;
    } catch (const CapExceeded& e) {
        os << "cocycle: not checked (" << e.what() << ")\n";
        report["cocycle"] = nullptr;
    }
    return os.str();
}

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const OrientationError*>(&e))
        return ExitCode::orientation;
    if (dynamic_cast<const CapExceeded*>(&e))
        return ExitCode::cap;
    if (dynamic_cast<const MoveError*>(&e))
        return ExitCode::move_not_found;
    if (dynamic_cast<const MalformedInput*>(&e))
        return ExitCode::malformed;
    return ExitCode::usage;
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        std::string text;
        if (config.command == "frobenius") {
            json report;
            text = cmd_frobenius(config, report);
            if (config.out)
                text = render(report);
        } else if (config.command == "invariant") {
            text = render(cmd_invariant(config));
        } else if (config.command == "verify") {
            text = render(cmd_verify(config));
        } else if (config.command == "compare") {
            text = render(cmd_compare(config));
        } else if (config.command == "manifold") {
            const auto report = cmd_manifold(config);
            if (config.action == "save")
                return ExitCode::ok;
            text = render(report);
        } else {
            throw UsageError("unknown command '" + config.command + "'");
        }
        if (config.out) {
            std::ofstream file(*config.out);
            if (!file)
                throw UsageError("cannot write '" + *config.out + "'");
            file << text;
        } else {
            out << text;
        }
        return ExitCode::ok;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << " (required " << e.required() << ")\n";
        return ExitCode::cap;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

} // namespace hexaform::cli
