#include "muskat/wiener.hpp"

#include <cmath>

#include "muskat/errors.hpp"

namespace muskat {

double EstimateConstants::K(double s) {
    if (s < 0.0) throw ParameterError("K_s requires s >= 0");
    if (s > 0.0 && s <= 1.0) return 1.0;
    return std::pow(2.0, s - 1.0);
}

double EstimateConstants::K_pow(double s, int n) {
    if (n < 2) throw ParameterError("power constant requires n >= 2");
    if (s == 0.0) return 1.0;
    if (s <= 1.0) return n;
    const double q = 2.0 * K(s);
    return q * (std::pow(q, n - 1) - 1.0) / (q - 1.0);
}

InequalityReport InequalityReport::make(std::string name, double lhs, double rhs) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.holds = r.slack >= -1e-12;
    return r;
}

ComposeResult compose_G(const SpectralField& v, const WienerIndex& idx) {
    const double size = wiener_norm(v, {});
    if (size <= 0.5) {
        // Binomial series of (1+v)^{-3/2} - 1 with coefficient-space powers.
        SpectralField sum(v.grid()), power = v;
        double c = 1.0;
        for (int k = 1; k <= 200; ++k) {
            c *= (-0.5 - k) / k;
            sum += c * power;
            if (std::abs(c) * std::pow(size, k) < 1e-18) break;
            power = convolve(power, v);
        }
        return {sum, 4.0 * EstimateConstants::K(idx.s) * wiener_norm(v, {0.0, idx.lambda}) < 1.0};
    }
    std::vector<double> x = to_physical(v);
    for (double& xi : x) {
        if (!(1.0 + xi > 0.0)) throw DomainError("compose_G: 1 + v <= 0 at a grid point");
        xi = std::pow(1.0 + xi, -1.5) - 1.0;
    }
    ComposeResult out{to_spectral(x, v.grid()), true};
    out.bound_precondition =
        4.0 * EstimateConstants::K(idx.s) * wiener_norm(v, {0.0, idx.lambda}) < 1.0;
    return out;
}

SpectralField curvature(const SpectralField& zeta, double eps, double mu) {
    if (eps < 0.0 || mu < 0.0) throw ParameterError("curvature requires eps, mu >= 0");
    const SpectralField zxx = derivative(zeta, 2);
    if (eps == 0.0 || mu == 0.0) return zxx;
    const SpectralField slope = (eps * std::sqrt(mu)) * derivative(zeta, 1);
    const SpectralField F = compose_G(multiply(slope, slope)).value;
    return zxx + multiply(F, zxx);
}

InequalityReport interpolation_report(const SpectralField& f, double s1, double s2, double theta,
                                      double lambda) {
    const double st = theta * s1 + (1.0 - theta) * s2;
    const double lhs = wiener_norm(f, {st, lambda});
    const double rhs = std::pow(wiener_norm(f, {s1, lambda}), theta) *
                       std::pow(wiener_norm(f, {s2, lambda}), 1.0 - theta);
    return InequalityReport::make("interpolation", lhs, rhs);
}

std::vector<InequalityReport> inequality_report(const SpectralField& f, const SpectralField& g,
                                                const WienerIndex& idx, double theta, int n_pow) {
    idx.validate();
    if (!(f.grid() == g.grid())) throw ShapeError("inequality_report: fields on different grids");
    if (theta < 0.0 || theta > 1.0) throw ParameterError("theta must lie in [0, 1]");
    const double s = idx.s;
    const double lam = idx.lambda;
    const double Ks = EstimateConstants::K(s);
    auto norm = [lam](const SpectralField& h, double order) { return wiener_norm(h, {order, lam}); };

    std::vector<InequalityReport> out;
    out.push_back(InequalityReport::make(
        "product", norm(multiply(f, g), s), Ks * (norm(f, 0) * norm(g, s) + norm(f, s) * norm(g, 0))));

    SpectralField power = f;
    for (int k = 1; k < n_pow; ++k) power = multiply(power, f);
    const double pow_rhs = s == 0.0 ? std::pow(norm(f, 0), n_pow)
                                    : EstimateConstants::K_pow(s, n_pow) *
                                          std::pow(norm(f, 0), n_pow - 1) * norm(f, s);
    out.push_back(InequalityReport::make("power_" + std::to_string(n_pow), norm(power, s), pow_rhs));

    out.push_back(interpolation_report(f, 0.0, 2.0 * s, theta, lam));

    if (4.0 * Ks * norm(f, 0) < 1.0 && wiener_norm(f, {0.0, 0.0}) < 1.0) {
        const SpectralField G = compose_G(f, idx).value;
        out.push_back(InequalityReport::make("composition_G", norm(G, s), 18.0 * Ks * norm(f, s)));
    }
    return out;
}

}  // namespace muskat
