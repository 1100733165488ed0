#include <algorithm>
#include <cmath>
#include <string>

#include "muskat/errors.hpp"
#include "muskat/strip.hpp"
#include "muskat/wiener.hpp"

namespace muskat {
namespace {

std::vector<double> profile(const ZGrid& zg, double (*fn)(double)) {
    std::vector<double> v = zg.nodes();
    for (double& z : v) z = fn(z);
    return v;
}

double lift(double z) { return z + 1.0; }
double lift_sq(double z) { return (z + 1.0) * (z + 1.0); }
double twice_lift(double z) { return 2.0 * (z + 1.0); }
double parabola(double z) { return 0.5 * z * z + z; }

void check_thickness(const SpectralField& zeta, double eps) {
    for (double v : to_physical(zeta))
        if (!(1.0 + eps * v > 0.0)) throw DomainError("pinch-off: 1 + eps*zeta <= 0 at a grid point");
}

// 1/(1 + eps zeta), evaluated pointwise.
SpectralField inverse_thickness(const SpectralField& zeta, double eps) {
    check_thickness(zeta, eps);
    return map_pointwise(zeta, [eps](double v) { return 1.0 / (1.0 + eps * v); });
}

SpectralField thickness(const SpectralField& zeta, double eps) {
    SpectralField one(zeta.grid());
    one.set(0, 1.0);
    return one + eps * zeta;
}

// Pieces of Q(Sigma): q12 = (z+1) c12, q22 = a22 + (z+1)^2 b22.
struct DiffeoParts {
    SpectralField q11, c12, a22, b22;
};

DiffeoParts diffeo_parts(const SpectralField& zeta, double eps, double mu) {
    const SpectralField inv = inverse_thickness(zeta, eps);
    const SpectralField zx = derivative(zeta, 1);
    DiffeoParts p;
    p.q11 = eps * zeta;
    p.c12 = (-std::sqrt(mu) * eps) * zx;
    p.a22 = multiply(-eps * zeta, inv);
    p.b22 = multiply((mu * eps * eps) * multiply(zx, zx), inv);
    return p;
}

}  // namespace

DiffeoCoeffs assemble_diffeo(const SpectralField& zeta, double eps, double mu, const ZGrid& zg) {
    const DiffeoParts p = diffeo_parts(zeta, eps, mu);
    const SpectralField zero(zeta.grid());
    DiffeoCoeffs q;
    q.q11 = StripField::constant_in_z(p.q11, zg);
    q.q12 = StripField::separable(p.c12, profile(zg, lift), zg);
    q.q21 = q.q12;
    q.q22 = StripField::constant_in_z(p.a22, zg) + StripField::separable(p.b22, profile(zg, lift_sq), zg);
    q.sigma_z = StripField::constant_in_z(eps * zeta, zg);
    q.sigma_x = StripField::separable(eps * derivative(zeta, 1), profile(zg, lift), zg);
    q.dz_q11 = StripField::constant_in_z(zero, zg);
    q.dz_q12 = StripField::constant_in_z(p.c12, zg);
    q.dz_q21 = q.dz_q12;
    q.dz_q22 = StripField::separable(p.b22, profile(zg, twice_lift), zg);
    return q;
}

double diffeo_norm(const DiffeoCoeffs& q, const WienerIndex& idx) {
    return strip_norm(q.dz_q11, idx) + strip_norm(q.dz_q12, idx) + strip_norm(q.dz_q21, idx) +
           strip_norm(q.dz_q22, idx);
}

Sources build_sources(const SpectralField& zeta, const RegimeParams& params, RemainderVariant variant,
                      const ZGrid& zg) {
    const double eps = params.eps, mu = params.mu;
    const double cap = params.capillarity();
    const double grav = params.gravity_sign();
    check_thickness(zeta, eps);

    const SpectralField J = thickness(zeta, eps);
    const SpectralField zx = derivative(zeta, 1);
    const SpectralField zxx = derivative(zeta, 2);
    const SpectralField zxxxx = derivative(zeta, 4);

    Sources s{StripField(zeta.grid(), zg), StripField(zeta.grid(), zg), StripField(zeta.grid(), zg),
              SpectralField(zeta.grid())};

    const SpectralField slope = (eps * std::sqrt(mu)) * zx;
    const SpectralField F = compose_G(multiply(slope, slope)).value;
    s.h = (eps * cap) * multiply(F, zxx);

    if (variant == RemainderVariant::FirstOrder) {
        const SpectralField lead_xx = eps * (grav * zxx + cap * zxxxx);
        s.f = StripField::constant_in_z(-mu * multiply(J, lead_xx), zg);
        return s;
    }

    if ((variant == RemainderVariant::RefinedStable) != params.stable)
        throw ConfigError("refined remainder variant does not match the gravity sign of the regime");

    // A applied to the first-order correction -grav*eps*p(z)*W, W = (1+eps zeta)^2 zeta_xx,
    // splits as grav*(p(z) X1 + (z+1)^2 X2).
    const SpectralField W = multiply(multiply(J, J), zxx);
    const SpectralField Wx = derivative(W, 1);
    const SpectralField zxWx = multiply(zx, Wx);
    const SpectralField X1 = -eps * derivative(multiply(J, Wx), 1) + (eps * eps) * zxWx;
    const SpectralField inv = inverse_thickness(zeta, eps);
    const SpectralField X2 = (eps * eps) * zxWx + (eps * eps) * derivative(multiply(zx, W), 1) -
                             (3.0 * eps * eps * eps) * multiply(multiply(multiply(zx, zx), W), inv);

    const SpectralField lead = (-mu * cap * eps) * multiply(J, zxxxx);
    s.f = StripField::constant_in_z(lead, zg) +
          StripField::separable((-mu * mu * grav) * X1, profile(zg, parabola), zg) +
          StripField::separable((-mu * mu * grav) * X2, profile(zg, lift_sq), zg);
    return s;
}

PotentialResult picard_solve(const SpectralField& zeta, const RegimeParams& params, const StripField& f,
                             const SpectralField& h, const PicardOptions& opts) {
    const double eps = params.eps, mu = params.mu;
    const ZGrid zg = opts.zgrid;
    const GridSpec grid = zeta.grid();
    const int M = grid.product_size();
    const int nz = zg.n_z;
    const std::vector<double> z = zg.nodes();

    const DiffeoParts p = diffeo_parts(zeta, eps, mu);
    const std::vector<double> q11 = evaluate_on(p.q11, M);
    const std::vector<double> c12 = evaluate_on(p.c12, M);
    const std::vector<double> a22 = evaluate_on(p.a22, M);
    const std::vector<double> b22 = evaluate_on(p.b22, M);

    PotentialResult res;
    res.contraction_ok = 3.0 * EstimateConstants::C_ell * eps * std::sqrt(mu) *
                             wiener_norm(zeta, {1.0, opts.lambda}) <
                         1.0;

    const StripField zero(grid, zg);
    StripField phi = solve_poisson_strip(zero, zero, f, h, mu, opts.exec);

    // g = -Q grad^mu phi, one z-level at a time on the padded grid.
    auto divergence_data = [&](const StripField& u, StripField& g1, StripField& g2) {
        const Gradient gr = grad_mu(u, mu);
        auto level = [&](int j) {
            const double l = z[j] + 1.0;
            std::vector<double> ux = evaluate_on(gr.x.level(j), M);
            std::vector<double> uz = evaluate_on(gr.z.level(j), M);
            std::vector<double> r1(M), r2(M);
            for (int i = 0; i < M; ++i) {
                const double q12 = l * c12[i];
                const double q22 = a22[i] + l * l * b22[i];
                r1[i] = -(q11[i] * ux[i] + q12 * uz[i]);
                r2[i] = -(q12 * ux[i] + q22 * uz[i]);
            }
            g1.set_level(j, project_from(r1, grid));
            g2.set_level(j, project_from(r2, grid));
        };
        if (opts.exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
            for (int j = 0; j < nz; ++j) level(j);
        } else {
            for (int j = 0; j < nz; ++j) level(j);
        }
    };

    StripField g1(grid, zg), g2(grid, zg);
    for (int it = 1; it <= opts.max_iter; ++it) {
        divergence_data(phi, g1, g2);
        StripField next = solve_poisson_strip(g1, g2, f, h, mu, opts.exec);
        const double gap = grad_norm(next - phi, mu);
        const double scale = grad_norm(next, mu);
        phi = std::move(next);
        res.gaps.push_back(gap);
        res.iterations = it;
        res.last_gap = gap;
        if (gap <= opts.tol * scale || gap == 0.0) {
            res.phi = std::move(phi);
            return res;
        }
    }
    throw ConvergenceError("Picard iteration did not converge in " + std::to_string(opts.max_iter) +
                               " iterations (last gap " + std::to_string(res.last_gap) + ")",
                           res.last_gap);
}

PotentialResult remainder_potential(const SpectralField& zeta, const RegimeParams& params,
                                    RemainderVariant variant, const PicardOptions& opts) {
    const Sources s = build_sources(zeta, params, variant, opts.zgrid);
    return picard_solve(zeta, params, s.f, s.h, opts);
}

PotentialResult full_potential(const SpectralField& zeta, const RegimeParams& params,
                               const PicardOptions& opts) {
    check_thickness(zeta, params.eps);
    const SpectralField kappa = curvature(zeta, params.eps, params.mu);
    const SpectralField h = params.eps * (params.gravity_sign() * zeta + params.capillarity() * kappa);
    return picard_solve(zeta, params, StripField(zeta.grid(), opts.zgrid), h, opts);
}

SpectralField remainder_flux(const SpectralField& zeta, const StripField& phi, double eps) {
    if (!(zeta.grid() == phi.grid())) throw ShapeError("remainder_flux: grids differ");
    // int (z+1) d_z phi dz = phi(0) - int phi dz
    const SpectralField mean = vertical_integral(phi);
    const SpectralField lifted = phi.level(phi.n_z() - 1) - mean;
    const SpectralField flux =
        multiply(thickness(zeta, eps), derivative(mean, 1)) - eps * multiply(derivative(zeta, 1), lifted);
    return derivative(flux, 1);
}

}  // namespace muskat
