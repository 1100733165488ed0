#include "muskat/estimates.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "muskat/errors.hpp"
#include "muskat/evolution.hpp"

namespace muskat {
namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Random complex polynomial profile of degree <= 4 on the z-nodes, optionally vanishing at z = -1.
std::vector<Complex> random_profile(const ZGrid& zg, std::mt19937_64& rng, bool zero_at_bottom) {
    std::array<Complex, 5> c;
    for (Complex& a : c) a = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
    std::vector<Complex> v;
    for (double z : zg.nodes()) {
        Complex p{};
        for (int k = 4; k >= 0; --k) p = p * z + c[k];
        v.push_back(zero_at_bottom ? (z + 1.0) * p : p);
    }
    return v;
}

StripField random_strip(const GridSpec& grid, const ZGrid& zg, int max_mode, std::mt19937_64& rng,
                        bool zero_at_bottom) {
    StripField f(grid, zg);
    for (int n = 0; n <= max_mode; ++n) {
        const double w = std::exp(-0.3 * n) * uniform(rng, 0, 1);
        std::vector<Complex> prof = random_profile(zg, rng, zero_at_bottom);
        for (int j = 0; j < zg.n_z; ++j) {
            Complex v = w * prof[static_cast<std::size_t>(j)];
            if (n == 0) v = v.real();
            f.set(n, j, v);
        }
    }
    return f;
}

std::string label(double theta) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.2f", theta);
    return buf;
}

}  // namespace

SpectralField random_trig(const GridSpec& grid, int max_mode, std::mt19937_64& rng) {
    SpectralField f(grid);
    for (int n = 1; n <= max_mode; ++n) f.set(n, {uniform(rng, -1, 1), uniform(rng, -1, 1)});
    f.set(0, uniform(rng, -1, 1));
    return f;
}

std::vector<InequalityReport> wiener_draws(int draws, std::uint64_t seed, const GridSpec& grid) {
    std::mt19937_64 rng(seed);
    const int band = grid.n_modes / 4;
    std::vector<InequalityReport> out;
    for (int d = 0; d < draws; ++d) {
        const WienerIndex idx{uniform(rng, 0.0, 4.0), uniform(rng, 0.0, 0.5)};
        const SpectralField f = random_trig(grid, 1 + static_cast<int>(rng() % band), rng);
        const SpectralField g = random_trig(grid, 1 + static_cast<int>(rng() % band), rng);
        const double Ks = EstimateConstants::K(idx.s);

        std::vector<InequalityReport> r = inequality_report(f, g, idx, 0.5, 2);
        out.push_back(r[0]);
        for (int n = 2; n <= 4; ++n) out.push_back(inequality_report(f, g, idx, 0.5, n)[1]);
        for (double theta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            InequalityReport ip = interpolation_report(f, 0.0, 2.0 * idx.s, theta, idx.lambda);
            ip.name = "interpolation_theta_" + label(theta);
            out.push_back(ip);
        }
        // Rescale into the region 4 K_s |v|_{0,lambda} < 1 where the composition bound applies.
        const double target = uniform(rng, 0.01, 0.99) / (4.0 * Ks);
        SpectralField v = (target / wiener_norm(f, {0.0, idx.lambda})) * f;
        const SpectralField G = compose_G(v, idx).value;
        out.push_back(InequalityReport::make("composition_G", wiener_norm(G, idx),
                                             18.0 * Ks * wiener_norm(v, idx)));
    }
    return out;
}

std::vector<InequalityReport> elliptic_draws(int draws, std::uint64_t seed, const GridSpec& grid,
                                             const ZGrid& zg) {
    std::mt19937_64 rng(seed);
    const int band = grid.n_modes / 2;
    std::vector<InequalityReport> out;
    for (int d = 0; d < draws; ++d) {
        const double mu = uniform(rng, 0.01, 0.99);
        const WienerIndex idx{uniform(rng, 0.0, 3.0), uniform(rng, 0.0, 1.0)};
        const StripField g1 = random_strip(grid, zg, band, rng, false);
        const StripField g2 = random_strip(grid, zg, band, rng, true);
        const StripField f = random_strip(grid, zg, band, rng, false);
        SpectralField h = random_trig(grid, band, rng);
        for (int n = 0; n <= band; ++n) h.set(n, std::exp(-0.3 * n) * h[n]);
        const StripField phi = solve_poisson_strip(g1, g2, f, h, mu);
        const double lhs = grad_norm(phi, mu, idx);
        const double rhs = EstimateConstants::C_ell * (strip_norm(g1, idx) + strip_norm(g2, idx) +
                                                       strip_norm(f, idx) + wiener_norm(h, idx));
        out.push_back(InequalityReport::make("elliptic_estimate", lhs, rhs + 1e-10));
    }
    return out;
}

std::vector<InequalityReport> strip_draws(int draws, std::uint64_t seed, const GridSpec& grid,
                                          const ZGrid& zg) {
    std::mt19937_64 rng(seed);
    const int band = grid.n_modes / 4;
    std::vector<InequalityReport> out;
    for (int d = 0; d < draws; ++d) {
        const WienerIndex idx{uniform(rng, 0.0, 3.0), uniform(rng, 0.0, 0.5)};
        const double mu = uniform(rng, 0.01, 0.99);
        const double eps = uniform(rng, 0.05, 1.0);
        SpectralField zeta = random_trig(grid, 1 + static_cast<int>(rng() % band), rng);
        zeta.set(0, 0.0);
        const double cap = 1.0 / (8.0 * EstimateConstants::K(idx.s) * eps);
        zeta *= uniform(rng, 0.01, 1.0) * cap / wiener_norm(zeta, {1.0, idx.lambda});
        const DiffeoCoeffs q = assemble_diffeo(zeta, eps, mu, zg);
        out.push_back(InequalityReport::make("q_bound", diffeo_norm(q, idx),
                                             3.0 * eps * std::sqrt(mu) * wiener_norm(zeta, {idx.s + 1.0, idx.lambda}) +
                                                 1e-10));

        const StripField phi = random_strip(grid, zg, band, rng, false);
        const StripField top = StripField::constant_in_z(phi.level(zg.n_z - 1), zg);
        out.push_back(InequalityReport::make("poincare", strip_norm(phi - top, idx),
                                             strip_norm(phi, idx, 1) + 1e-10));
    }
    return out;
}

std::vector<InequalityReport> solver_checks() {
    std::vector<InequalityReport> out;
    const GridSpec grid = GridSpec::with_modes(8);
    double cosh_err = 0.0, quad_err = 0.0;
    std::vector<double> residual;
    for (int n_z : {17, 33, 65}) {
        const ZGrid zg(n_z);
        const StripField zero(grid, zg);
        const StripField phi = solve_poisson_strip(zero, zero, zero, SpectralField::trig(grid, {0.0, 1.0}), 1.0);
        StripField one(grid, zg);
        for (int j = 0; j < n_z; ++j) one.set(0, j, 1.0);
        const StripField mean = solve_poisson_strip(zero, zero, one, SpectralField(grid), 1.0);
        for (int j = 0; j < n_z; ++j) {
            const double z = zg.node(j);
            cosh_err = std::max(cosh_err, std::abs(phi(1, j) - 0.5 * std::cosh(1.0 + z) / std::cosh(1.0)));
            quad_err = std::max(quad_err, std::abs(mean(0, j) - (0.5 * z * z + z)));
            for (int n = 2; n <= grid.n_modes; ++n) cosh_err = std::max(cosh_err, std::abs(phi(n, j)));
        }

        // cos(x) cosh(2(1+z)) with mu = 1/2: source (4 - mu) phi
        StripField f(grid, zg);
        const double mu = 0.5, amp = 0.5 * (4.0 - mu) * std::cosh(2.0);
        for (int j = 0; j < n_z; ++j) f.set(1, j, 0.5 * (4.0 - mu) * std::cosh(2.0 * (1.0 + zg.node(j))));
        SpectralField h(grid);
        h.set(1, 0.5 * std::cosh(2.0));
        const StripField sol = solve_poisson_strip(zero, zero, f, h, mu);
        residual.push_back(poisson_residual(sol, zero, zero, f, mu) / amp);
    }
    out.push_back(InequalityReport::make("manufactured_cosh_boundary", cosh_err, 1e-10));
    out.push_back(InequalityReport::make("manufactured_mean_quadratic", quad_err, 1e-10));
    out.push_back(InequalityReport::make("residual_order_17_33", 1.9, std::log2(residual[0] / residual[1])));
    out.push_back(InequalityReport::make("residual_order_33_65", 1.9, std::log2(residual[1] / residual[2])));
    return out;
}

std::vector<InequalityReport> remainder_checks(const SpectralField& zeta, const std::vector<double>& mus,
                                               const RegimeParams& params, RemainderVariant variant,
                                               const PicardOptions& opts) {
    const SlopeFit fit = remainder_scaling_study(zeta, mus, params, variant, opts);
    if (!fit.valid) throw ValidationError("remainder scaling fit rejected: " + fit.flag);
    const bool first = variant == RemainderVariant::FirstOrder;
    const double lo = first ? 0.9 : 1.4, hi = first ? 1.1 : 1.6;
    const std::string tag = "remainder_slope_" + to_string(variant);
    return {InequalityReport::make(tag + "_lower", lo, fit.slope), InequalityReport::make(tag + "_upper", fit.slope, hi)};
}

std::vector<InequalityReport> decomposition_checks(const SpectralField& zeta, const RegimeParams& params,
                                                   const std::vector<RemainderVariant>& variants,
                                                   const PicardOptions& opts) {
    std::vector<InequalityReport> out;
    for (RemainderVariant v : variants)
        out.push_back(InequalityReport::make("decomposition_residual_" + to_string(v),
                                             decomposition_residual(zeta, params, v, opts), 100.0 * opts.tol));
    return out;
}

}  // namespace muskat
