#include "muskat/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "muskat/errors.hpp"

namespace muskat::io {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json spectral_to_json(const SpectralField& f) {
    ordered_json j;
    j["n_modes"] = f.n_modes();
    j["n_phys"] = f.grid().n_phys;
    ordered_json triples = ordered_json::array();
    for (int n = -f.n_modes(); n <= f.n_modes(); ++n) triples.push_back({n, f[n].real(), f[n].imag()});
    j["coeffs"] = std::move(triples);
    return j;
}

SpectralField spectral_from_json(const json& j) {
    try {
        const GridSpec grid{j.at("n_modes").get<int>(), j.at("n_phys").get<int>()};
        std::vector<Complex> c(static_cast<std::size_t>(2 * grid.n_modes + 1));
        for (const auto& t : j.at("coeffs")) {
            const int n = t.at(0).get<int>();
            if (std::abs(n) > grid.n_modes) throw ShapeError("coefficient index outside the band");
            c[static_cast<std::size_t>(n + grid.n_modes)] = {t.at(1).get<double>(), t.at(2).get<double>()};
        }
        return SpectralField(grid, std::move(c));
    } catch (const json::exception& e) {
        throw ShapeError(std::string("malformed spectral field document: ") + e.what());
    }
}

ordered_json strip_to_json(const StripField& f) {
    ordered_json j;
    j["n_modes"] = f.n_modes();
    j["n_phys"] = f.grid().n_phys;
    j["n_z"] = f.n_z();
    ordered_json rows = ordered_json::array();
    for (int n = -f.n_modes(); n <= f.n_modes(); ++n)
        for (int k = 0; k < f.n_z(); ++k) rows.push_back({n, k, f(n, k).real(), f(n, k).imag()});
    j["coeffs"] = std::move(rows);
    return j;
}

StripField strip_from_json(const json& j) {
    try {
        const GridSpec grid{j.at("n_modes").get<int>(), j.at("n_phys").get<int>()};
        const ZGrid zg(j.at("n_z").get<int>());
        std::vector<Complex> c(static_cast<std::size_t>(2 * grid.n_modes + 1) * static_cast<std::size_t>(zg.n_z));
        for (const auto& r : j.at("coeffs")) {
            const int n = r.at(0).get<int>(), k = r.at(1).get<int>();
            if (std::abs(n) > grid.n_modes || k < 0 || k >= zg.n_z) throw ShapeError("strip index out of range");
            c[static_cast<std::size_t>(n + grid.n_modes) * zg.n_z + k] = {r.at(2).get<double>(), r.at(3).get<double>()};
        }
        return StripField(grid, zg, std::move(c));
    } catch (const json::exception& e) {
        throw ShapeError(std::string("malformed strip field document: ") + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trajectory_csv(const Trajectory& traj, const std::string& label) {
    std::ostringstream os;
    os << (label.empty() ? "" : "model,") << "t,n,re,im\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const SpectralField& s = traj.states[i];
        for (int n = -s.n_modes(); n <= s.n_modes(); ++n) {
            if (!label.empty()) os << label << ',';
            os << fmt(traj.times[i]) << ',' << n << ',' << fmt(s[n].real()) << ',' << fmt(s[n].imag()) << '\n';
        }
    }
    return os.str();
}

std::string physical_csv(const SpectralField& f) {
    std::ostringstream os;
    os << "x,value\n";
    const std::vector<double> x = f.grid().nodes();
    const std::vector<double> v = to_physical(f);
    for (std::size_t j = 0; j < x.size(); ++j) os << fmt(x[j]) << ',' << fmt(v[j]) << '\n';
    return os.str();
}

std::string ledger_csv(const EnergyLedger& led) {
    std::ostringstream os;
    os << "t,norm0,norm4_integral,inequality_slack,decay_slack\n";
    for (std::size_t i = 0; i < led.times.size(); ++i)
        os << fmt(led.times[i]) << ',' << fmt(led.norm0[i]) << ',' << fmt(led.norm4_integral[i]) << ','
           << fmt(led.inequality_slack[i]) << ',' << fmt(led.decay_slack[i]) << '\n';
    return os.str();
}

std::string inequalities_csv(const std::vector<InequalityReport>& reports) {
    std::ostringstream os;
    os << "name,lhs,rhs,slack,holds\n";
    for (const InequalityReport& r : reports)
        os << r.name << ',' << fmt(r.lhs) << ',' << fmt(r.rhs) << ',' << fmt(r.slack) << ','
           << (r.holds ? "true" : "false") << '\n';
    return os.str();
}

std::string slopes_csv(const ConvergenceStudy& study) {
    std::ostringstream os;
    os << "mu,nu,sup_norm0,int_norm4,rate,combined_error\n";
    for (const StudyPoint& p : study.points)
        os << fmt(p.mu) << ',' << fmt(p.nu) << ',' << fmt(p.error.sup_norm0) << ',' << fmt(p.error.int_norm4)
           << ',' << fmt(p.rate) << ',' << fmt(p.combined) << '\n';
    return os.str();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace muskat::io
