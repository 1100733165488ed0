#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "muskat/diagnostics.hpp"
#include "muskat/strip.hpp"
#include "muskat/wiener.hpp"

namespace muskat {

// Random real trigonometric polynomial of degree <= max_mode with |coefficients| <= 1.
SpectralField random_trig(const GridSpec& grid, int max_mode, std::mt19937_64& rng);

// Product, powers 2..4, interpolation at five weights and G composition, per draw.
std::vector<InequalityReport> wiener_draws(int draws, std::uint64_t seed, const GridSpec& grid);

// Elliptic estimate with constant 10 on random (g, f, h) with polynomial z-profiles.
std::vector<InequalityReport> elliptic_draws(int draws, std::uint64_t seed, const GridSpec& grid,
                                             const ZGrid& zgrid);

// Q(Sigma) bound and the vertical Poincare inequality on random inputs.
std::vector<InequalityReport> strip_draws(int draws, std::uint64_t seed, const GridSpec& grid,
                                          const ZGrid& zgrid);

// Manufactured strip solutions (boundary cosh profile, mode-0 quadratic) and the
// observed order of the discrete residual over n_z in {17, 33, 65}.
std::vector<InequalityReport> solver_checks();

// Slope of ||grad^mu phi~|| against mu inside the band of the variant's order.
std::vector<InequalityReport> remainder_checks(const SpectralField& zeta, const std::vector<double>& mus,
                                               const RegimeParams& params, RemainderVariant variant,
                                               const PicardOptions& opts = {});

// Decomposition residual against 100 times the Picard tolerance for each variant.
std::vector<InequalityReport> decomposition_checks(const SpectralField& zeta, const RegimeParams& params,
                                                   const std::vector<RemainderVariant>& variants,
                                                   const PicardOptions& opts = {});

}  // namespace muskat
