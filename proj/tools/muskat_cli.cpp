#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "muskat/config.hpp"
#include "muskat/errors.hpp"
#include "muskat/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Thin-film and Muskat interface simulations"};
    app.require_subcommand(1, 1);

    std::string config_path;
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    for (const char* name : {"simulate", "compare", "convergence", "verify-estimates", "dispersion"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--out", out_dir, "output directory (overrides the config)");
        sub->add_option("--seed", seed, "random seed (overrides the config)");
    }
    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    std::filesystem::path fallback_dir = out_dir ? *out_dir : std::string("out");
    try {
        muskat::RunConfig cfg = muskat::parse_config(muskat::io::read_text(config_path));
        if (muskat::command_from_string(command) != cfg.command)
            throw muskat::ConfigError("command '" + command + "' does not match config command '" +
                                      muskat::to_string(cfg.command) + "'");
        if (out_dir) cfg.output_dir = *out_dir;
        if (seed) cfg.seed = *seed;
        fallback_dir = cfg.output_dir;
        const muskat::RunResult r = muskat::run(cfg);
        for (const auto& f : r.files) std::cout << f.string() << '\n';
        if (r.exit_code != 0) std::cerr << "run failed; see " << (cfg.output_dir / "error.json").string() << '\n';
        return r.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        muskat::write_error(fallback_dir, e);
        return muskat::exit_code_for(e);
    }
}
