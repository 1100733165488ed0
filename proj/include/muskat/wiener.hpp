#pragma once

#include <string>
#include <vector>

#include "muskat/spectral.hpp"

namespace muskat {

struct EstimateConstants {
    static constexpr double C_ell = 10.0;
    static constexpr double C0 = 3120.0;

    static double K(double s);
    static double K_pow(double s, int n);
};

struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = true;

    static InequalityReport make(std::string name, double lhs, double rhs);
};

struct ComposeResult {
    SpectralField value;
    bool bound_precondition = true;  // 4 K_s |v|_{0,lambda} < 1 at lambda = 0, s = 0
};

// G(x) = (1+x)^{-3/2} - 1 applied pointwise.
ComposeResult compose_G(const SpectralField& v, const WienerIndex& idx = {});
SpectralField curvature(const SpectralField& zeta, double eps, double mu);

std::vector<InequalityReport> inequality_report(const SpectralField& f, const SpectralField& g,
                                                const WienerIndex& idx, double theta, int n_pow);

// Interpolation between s1 and s2 at weight theta.
InequalityReport interpolation_report(const SpectralField& f, double s1, double s2, double theta,
                                      double lambda);

}  // namespace muskat
