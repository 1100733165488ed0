#pragma once

#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "muskat/io.hpp"
#include "muskat/spectral.hpp"

namespace support {

inline nlohmann::json fixture(const std::string& name) {
    return nlohmann::json::parse(muskat::io::read_text(std::filesystem::path(MUSKAT_FIXTURES) / name));
}

inline std::filesystem::path preset(const std::string& name) {
    return std::filesystem::path(MUSKAT_PRESETS) / name;
}

inline muskat::SpectralField random_field(const muskat::GridSpec& g, int band, std::mt19937_64& rng,
                                          double scale = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    muskat::SpectralField f(g);
    f.set(0, scale * u(rng));
    for (int n = 1; n <= band; ++n) f.set(n, {scale * u(rng), scale * u(rng)});
    return f;
}

// Direct evaluation of sum_n c_n e^{inx}.
inline double direct_sum(const muskat::SpectralField& f, double x) {
    std::complex<double> acc{};
    for (int n = -f.n_modes(); n <= f.n_modes(); ++n) acc += f[n] * std::polar(1.0, n * x);
    return acc.real();
}

inline double max_coeff_diff(const muskat::SpectralField& a, const muskat::SpectralField& b) {
    double m = 0.0;
    for (int n = -a.n_modes(); n <= a.n_modes(); ++n) m = std::max(m, std::abs(a[n] - b[n]));
    return m;
}

}  // namespace support
