#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "muskat/evolution.hpp"

namespace muskat {

enum class Command { Simulate, Compare, Convergence, VerifyEstimates, Dispersion };

std::string to_string(Command c);
Command command_from_string(const std::string& name);

struct InitialData {
    // Either explicit modes or an amplitude derived from the smallness threshold.
    bool auto_smallness = false;
    double scale = 0.5;
    std::vector<double> cos_amp;  // index k holds the cos(kx) amplitude; index 0 stays zero
    std::vector<double> sin_amp;
};

struct RunConfig {
    static constexpr int kSchemaVersion = 1;

    Command command = Command::Simulate;
    ModelSpec model{};
    std::optional<ModelSpec> reference;  // Muskat model for compare and convergence
    GridSpec grid{};
    double t_end = 1.0;
    double dt = 1e-3;
    int sample_every = 1;
    bool auto_dt = true;
    InitialData initial{};
    std::vector<double> mus;
    double amplitude_scale = 1.0;
    int draws = 200;
    std::vector<std::string> suites{"wiener", "elliptic", "strip"};
    int n_min = 1;
    int n_max = 8;
    std::filesystem::path output_dir = "out";
    std::uint64_t seed = 0;
};

// Parses and validates a JSON config; fills defaults. Throws ConfigError on
// malformed documents or unknown keys, ValidationError on constraint violations.
RunConfig parse_config(const std::string& text);

// Default analyticity rate for a model run on its own.
double default_nu(const ModelSpec& model);
// Human-readable list of the regime constraints a model was validated against.
std::string constraint_set(const ModelSpec& model);

// Initial data named by the config, resolved against the model's thresholds.
SpectralField resolve_initial(const RunConfig& cfg);

// Fan-out cap: MUSKAT_THREADS if set, else the OpenMP default.
int thread_budget();

struct RunResult {
    int exit_code = 0;
    std::vector<std::filesystem::path> files;
};

// 2 validation, 3 numerical failure, 4 I/O; 1 for anything unclassified.
int exit_code_for(const std::exception& e);
// Machine-readable failure record written to <dir>/error.json.
void write_error(const std::filesystem::path& dir, const std::exception& e);

// Executes the command; on failure writes error.json and returns 2, 3 or 4.
RunResult run(const RunConfig& cfg);

}  // namespace muskat
