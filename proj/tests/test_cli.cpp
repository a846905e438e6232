#include "hexaform/cli/commands.hpp"
#include "hexaform/complex/builtin.hpp"
#include "hexaform/complex/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace hexaform;
using namespace hexaform::cli;

namespace {

const std::filesystem::path& scratch()
{
    static const auto dir = [] {
        auto d = std::filesystem::temp_directory_path() / "hexaform_test_cli";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::pair<int, std::string> run_config(const RunConfig& c)
{
    std::ostringstream out, err;
    const int code = run(c, out, err);
    return {code, out.str()};
}

RunConfig config(std::string command, std::string manifold = "s4")
{
    RunConfig c;
    c.command = std::move(command);
    c.manifold = std::move(manifold);
    return c;
}

int shell(const std::string& args)
{
    const std::string cmd = std::string(HEXAFORM_CLI) + " " + args + " >" + (scratch() / "stdout.txt").string()
                          + " 2>" + (scratch() / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string write_file(const std::string& name, const std::string& text)
{
    const auto p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

} // namespace

TEST_CASE("invariant command")
{
    auto [code, text] = run_config(config("invariant"));
    CHECK(code == ExitCode::ok);
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("form").at("rank") == 0);
    CHECK(text.back() == '\n');

    auto c = config("invariant");
    c.mode = "prob";
    c.m = 0;
    std::tie(code, text) = run_config(c);
    CHECK(code == ExitCode::ok);
    j = nlohmann::json::parse(text);
    const auto& entries = j.at("distribution").at("entries");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].at("value") == "0");
    CHECK(entries[0].at("probability") == "1");

    std::tie(code, text) = run_config(config("invariant", "cp2"));
    j = nlohmann::json::parse(text);
    CHECK(j.at("form").at("signature") == nlohmann::json::array({1, 0}));
    CHECK(j.at("form").at("det") == "1");
}

TEST_CASE("relabeling leaves the invariants unchanged")
{
    auto plain = config("invariant", "cp2");
    auto relabeled = plain;
    relabeled.relabel = true;
    relabeled.seed = 5;
    const auto a = nlohmann::json::parse(run_config(plain).second);
    const auto b = nlohmann::json::parse(run_config(relabeled).second);
    CHECK(a.at("form") == b.at("form"));
}

TEST_CASE("verify command")
{
    auto c = config("verify");
    c.script = "1-5,2-4,3-3";
    auto [code, text] = run_config(c);
    REQUIRE(code == ExitCode::ok);
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("all_equal") == true);
    CHECK(j.at("shifts_ok") == true);
    const auto& steps = j.at("steps");
    REQUIRE(steps.size() == 3);
    CHECK(steps[0].at("dim_shift") == 4);
    CHECK(steps[1].at("dim_shift") == 1);
    CHECK(steps[2].at("dim_shift") == 0);

    c.script = "2-4";
    CHECK(run_config(c).first == ExitCode::move_not_found);
    c.script = "1-5,9-9";
    CHECK(run_config(c).first == ExitCode::usage);
}

TEST_CASE("exit codes through the executable")
{
    CHECK(shell("invariant --manifold s4") == ExitCode::ok);
    CHECK(shell("invariant --manifold s4 --mode prob --p 4") == ExitCode::usage);
    CHECK(shell("invariant --manifold torus") == ExitCode::usage);
    CHECK(shell("no-such-command") == ExitCode::usage);
    CHECK(shell("--cap abc invariant --manifold s4") == ExitCode::usage);
    CHECK(shell("--cap 1 invariant --manifold cp2 --mode prob --p 2") == ExitCode::cap);
    CHECK(shell("verify --manifold s4 --script 2-4") == ExitCode::move_not_found);
    CHECK(shell("invariant --file " + write_file("broken.json", "{\"pentachora\": [[0,1,2,3,3]]}"))
          == ExitCode::malformed);
    CHECK(shell("invariant --file " + (scratch() / "absent.json").string()) == ExitCode::malformed);

    const std::string mobius = write_file(
        "mobius.json",
        R"({"name":"mobius","pentachora":[[0,1,2,5,6],[1,2,3,5,6],[2,3,4,5,6],[0,3,4,5,6],[0,1,4,5,6]]})");
    CHECK(shell("invariant --file " + mobius) == ExitCode::orientation);
    CHECK(slurp(scratch() / "stderr.txt").find("orientable") != std::string::npos);

    CHECK(setenv("HEXAFORM_CAP", "1", 1) == 0);
    CHECK(shell("invariant --manifold cp2 --mode prob --p 2") == ExitCode::cap);
    unsetenv("HEXAFORM_CAP");
    CHECK(shell("invariant --manifold cp2 --mode prob --p 2") == ExitCode::ok);
}

TEST_CASE("frobenius command")
{
    CHECK(shell("frobenius --p 2 --m 0") == ExitCode::ok);
    CHECK(slurp(scratch() / "stdout.txt").find("x_jklm") != std::string::npos);
    CHECK(shell("frobenius --reference-cubic") == ExitCode::ok);
    const auto text = slurp(scratch() / "stdout.txt");
    CHECK(text.find("cocycle: true") != std::string::npos);
    CHECK(text.find("degree: 3") != std::string::npos);
    CHECK(shell("frobenius --p 2 --m1 1 --m2 2") == ExitCode::ok);
    CHECK(slurp(scratch() / "stdout.txt").find("degree: 6") != std::string::npos);
}

TEST_CASE("compare command")
{
    auto [code, text] = run_config(config("compare"));
    CHECK(code == ExitCode::ok);
    auto base = nlohmann::json::parse(text);
    auto c = config("compare");
    c.random = 3;
    c.seed = 1;
    auto moved = nlohmann::json::parse(run_config(c).second);
    CHECK(moved.at("hexagon").at("rank") == 0);
    for (auto* j : {&base, &moved}) {
        j->at("hexagon").erase("dim");
        j->at("hexagon").erase("radical");
        j->erase("random");
        j->erase("seed");
    }
    CHECK(base == moved);

    CHECK(run_config(config("compare", "cp2")).first == ExitCode::ok);
}

TEST_CASE("manifold command and file sources")
{
    auto c = config("manifold", "cp2");
    auto [code, text] = run_config(c);
    CHECK(code == ExitCode::ok);
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("pentachora") == 36);
    CHECK(j.at("euler_characteristic") == 3);

    const auto path = (scratch() / "saved.json").string();
    c.action = "save";
    c.out = path;
    std::tie(code, text) = run_config(c);
    CHECK(code == ExitCode::ok);
    CHECK(complex::load(path) == complex::cp2_kuhnel9());

    auto from_file = config("invariant");
    from_file.file = path;
    const auto a = nlohmann::json::parse(run_config(from_file).second);
    const auto b = nlohmann::json::parse(run_config(config("invariant", "cp2")).second);
    CHECK(a.at("form") == b.at("form"));
}

TEST_CASE("reports are byte identical across runs")
{
    auto v = config("verify");
    v.script = "1-5,2-4";
    v.random = 4;
    v.seed = 11;
    v.relabel = true;
    CHECK(run_config(v).second == run_config(v).second);

    auto p = config("invariant", "cp2");
    p.mode = "prob";
    p.p = 3;
    p.n = 2;
    p.m = 1;
    p.model = "tensor";
    CHECK(run_config(p).second == run_config(p).second);

    const auto first = (scratch() / "first.json").string();
    const auto second = (scratch() / "second.json").string();
    CHECK(shell("--out " + first + " verify --manifold s4 --random 5 --seed 3") == ExitCode::ok);
    CHECK(shell("--out " + second + " verify --manifold s4 --random 5 --seed 3") == ExitCode::ok);
    CHECK(slurp(first) == slurp(second));
    CHECK_FALSE(slurp(first).empty());
}
