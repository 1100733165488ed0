#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "muskat/config.hpp"
#include "muskat/errors.hpp"
#include "support.hpp"

using namespace muskat;
namespace fs = std::filesystem;

TEST_SUITE_BEGIN("config");

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("muskat_config_test_" + name);
    fs::remove_all(dir);
    return dir;
}

RunConfig from_preset(const std::string& name, const std::string& out) {
    RunConfig cfg = parse_config(slurp(support::preset(name + ".json")));
    cfg.output_dir = scratch_dir(out);
    return cfg;
}

const char* kMinimal = R"({"schema_version": 1, "command": "simulate",
                           "model": {"law": "thin_film", "mu": 0.1, "Bo": 0.5}})";

}  // namespace

TEST_CASE("minimal config receives documented defaults") {
    const RunConfig cfg = parse_config(kMinimal);
    CHECK(cfg.grid.n_modes == 64);
    CHECK(cfg.model.n_z == 33);
    CHECK(cfg.dt == 1e-3);
    CHECK(cfg.model.params.nu == doctest::Approx(0.25));
    CHECK(cfg.initial.auto_smallness);
    CHECK(cfg.command == Command::Simulate);
}

TEST_CASE("constraint violations name the constraint") {
    auto message = [](const std::string& text) {
        try {
            parse_config(text);
        } catch (const ValidationError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message(R"({"schema_version":1,"command":"simulate","model":{"law":"thin_film","mu":0.1,"Bo":1.5}})")
              .find("Bo must lie in (0,1)") != std::string::npos);
    CHECK(message(R"({"schema_version":1,"command":"simulate",
                      "model":{"law":"refined_unstable","mu":0.04,"bo":0.5}})")
              .find("sqrt(mu)/bo + mu/3 must exceed 1") != std::string::npos);
    CHECK(message(R"({"schema_version":1,"command":"simulate","model":{"law":"thin_film","mu":0.1,"Bo":0.5,"bo":0.5}})")
              .find("exactly one of Bo") != std::string::npos);
}

TEST_CASE("malformed documents are config errors") {
    CHECK_THROWS_AS(parse_config(R"({"schema_version":1,"command":"simulate","model":{"law":"thin_film","mu":0.1,"Bo":0.5},"extra":1})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version":2,"command":"simulate","model":{"law":"thin_film","mu":0.1,"Bo":0.5}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"schema_version":1,"command":"simulate"})"), ConfigError);
    try {
        parse_config(R"({"schema_version": 1, "command": )");
        FAIL("expected a parse error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    try {
        parse_config(R"({"schema_version":1,"command":"simulate","model":{"law":"thin_film","mu":0.1,"Bo":0.5,"gravity":1}})");
        FAIL("expected an unknown key error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("config.model.gravity") != std::string::npos);
    }
}

TEST_CASE("dispersion command writes the linear symbol") {
    RunConfig cfg = from_preset("dispersion_thin_film", "dispersion");
    const RunResult r = run(cfg);
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp(cfg.output_dir / "dispersion.csv");
    // Bo = 1/2: n^2 - 2 n^4 at n = 1
    CHECK(csv.find("\n1,-1\n") != std::string::npos);
    for (const fs::path& f : r.files) CHECK(slurp(f).find("constraints") != std::string::npos);
}

TEST_CASE("zero initial data stays zero with vanishing ledger slacks") {
    RunConfig cfg = parse_config(kMinimal);
    cfg.initial.auto_smallness = false;
    cfg.t_end = 0.05;
    cfg.grid = GridSpec::with_modes(16);
    cfg.output_dir = scratch_dir("zero");
    REQUIRE(run(cfg).exit_code == 0);
    const auto s = nlohmann::json::parse(slurp(cfg.output_dir / "summary.json"));
    CHECK(s["final_norm_0_nut"].get<double>() == 0.0);
    CHECK(s["ledger"]["min_inequality_slack"].get<double>() == 0.0);
    CHECK(s["ledger"]["min_decay_slack"].get<double>() == 0.0);
}

TEST_CASE("runs are deterministic and every output carries the constraint set") {
    RunConfig a = from_preset("c6_mass_compare", "det_a");
    RunConfig b = from_preset("c6_mass_compare", "det_b");
    const RunResult ra = run(a), rb = run(b);
    REQUIRE(ra.exit_code == 0);
    REQUIRE(rb.exit_code == 0);
    CHECK(slurp(a.output_dir / "summary.json") == slurp(b.output_dir / "summary.json"));
    CHECK(slurp(a.output_dir / "trajectory.csv") == slurp(b.output_dir / "trajectory.csv"));
    for (const fs::path& f : ra.files) CHECK(slurp(f).find("constraints") != std::string::npos);
}

TEST_CASE("estimate presets report no violations") {
    for (const char* name : {"c2_strip_solver", "c7_decomposition"}) {
        RunConfig cfg = from_preset(name, name);
        REQUIRE(run(cfg).exit_code == 0);
        const auto s = nlohmann::json::parse(slurp(cfg.output_dir / "summary.json"));
        INFO(std::string(name));
        CHECK(s["violations"].get<int>() == 0);
        CHECK(slurp(cfg.output_dir / "inequalities.csv").find("constraints") != std::string::npos);
    }
}

TEST_CASE("exit codes follow the error category") {
    CHECK(exit_code_for(ValidationError("x")) == 2);
    CHECK(exit_code_for(ConfigError("x")) == 2);
    CHECK(exit_code_for(BlowUpError("x", 0.1)) == 3);
    CHECK(exit_code_for(IoError("x")) == 4);
    CHECK(exit_code_for(std::runtime_error("x")) == 1);

    const fs::path dir = scratch_dir("error");
    write_error(dir, StudyError("study failed at mu = 0.02", 0.02));
    const auto e = nlohmann::json::parse(slurp(dir / "error.json"));
    CHECK(e["exit_code"].get<int>() == 3);
    CHECK(e["mu"].get<double>() == 0.02);
}

TEST_CASE("blow-up exits with code 3 and an error record") {
    RunConfig cfg = parse_config(R"({"schema_version":1,"command":"simulate","grid":{"n_modes":16},
        "model":{"law":"ill_posed_sixth","mu":0.25,"Bo":1.0},
        "time":{"t_end":1.0,"dt":1e-3,"auto_dt":false},
        "initial":{"kind":"modes","modes":[{"n":16,"cos":1e-6}]}})");
    cfg.output_dir = scratch_dir("blowup");
    const RunResult r = run(cfg);
    CHECK(r.exit_code == 3);
    REQUIRE(fs::exists(cfg.output_dir / "error.json"));
    const auto e = nlohmann::json::parse(slurp(cfg.output_dir / "error.json"));
    CHECK(e["exit_code"].get<int>() == 3);
    CHECK(e.contains("time"));
}

TEST_CASE("convergence command on a short thin-film study") {
    RunConfig cfg = from_preset("c8_convergence_thin_film", "convergence");
    cfg.t_end = 0.1;
    cfg.sample_every = 2;
    cfg.grid = GridSpec::with_modes(16);
    REQUIRE(run(cfg).exit_code == 0);
    const auto s = nlohmann::json::parse(slurp(cfg.output_dir / "summary.json"));
    CHECK(s["slope"].get<double>() >= 0.8);
    CHECK(s["slope"].get<double>() <= 1.3);
    CHECK(slurp(cfg.output_dir / "slopes.csv").rfind("# constraints:", 0) == 0);
}

TEST_SUITE_END();
