#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "muskat/diagnostics.hpp"
#include "muskat/wiener.hpp"

namespace muskat::io {

// Fixed 17-significant-digit rendering used by every CSV and JSON number we emit.
std::string fmt(double v);

nlohmann::ordered_json spectral_to_json(const SpectralField& f);
SpectralField spectral_from_json(const nlohmann::json& j);
nlohmann::ordered_json strip_to_json(const StripField& f);
StripField strip_from_json(const nlohmann::json& j);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

// CSV bodies with a column-name row; callers may prepend '#' comment lines.
std::string trajectory_csv(const Trajectory& traj, const std::string& label = "");
std::string physical_csv(const SpectralField& f);
std::string ledger_csv(const EnergyLedger& led);
std::string inequalities_csv(const std::vector<InequalityReport>& reports);
std::string slopes_csv(const ConvergenceStudy& study);

// JSON numbers rendered through fmt so output is byte-stable.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace muskat::io
