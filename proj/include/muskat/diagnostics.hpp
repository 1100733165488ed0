#pragma once

#include <string>
#include <vector>

#include "muskat/evolution.hpp"

namespace muskat {

struct EnergyLedger {
    std::vector<double> times;
    std::vector<double> norm0;           // |zeta(t)|_{0, nu t}
    std::vector<double> norm4_integral;  // int_0^t |zeta|_{4, nu t'} dt'
    std::vector<double> inequality_slack;
    std::vector<double> decay_slack;
    double rate = 0.0;
    double nu = 0.0;
    double initial_norm = 0.0;
    bool small_strict = false;  // divisor 128
    bool small_loose = false;   // divisor 8
};

struct ErrorReport {
    double sup_norm0 = 0.0;
    double int_norm4 = 0.0;
    double mu = 0.0;
};

struct SlopeFit {
    std::vector<double> mus;
    std::vector<double> errors;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    bool valid = false;
    std::string flag;
};

// Dissipation rate (1/64)R of the law's energy inequality; R is the parabolicity margin.
double energy_rate(Law law, const RegimeParams& p);
// Smallness bound on |zeta_0|_{0,0} for the energy inequality with the given divisor.
double energy_smallness(Law law, const RegimeParams& p, double divisor = 128.0);
// Threshold on |zeta_in|_{1,0} for the Muskat comparison data.
double muskat_smallness(Law approx, const RegimeParams& p);
// nu = (sqrt(mu)/32) R, half the Muskat analyticity window.
double comparison_nu(Law approx, const RegimeParams& p);
// Smallest mu with y^2 + (3/bo) y - 3 > 0, y = sqrt(mu).
double refined_mu0(double bo);

EnergyLedger energy_report(const Trajectory& traj);
ErrorReport error_norms(const Trajectory& a, const Trajectory& b, double nu);

double decomposition_residual(const SpectralField& zeta, const RegimeParams& params, RemainderVariant variant,
                              const PicardOptions& opts = {});

SlopeFit fit_slope(const std::vector<double>& mus, const std::vector<double>& errors);

struct StudySetup {
    ModelSpec reference;    // Muskat
    ModelSpec approximate;  // thin-film or refined
    GridSpec grid = GridSpec::with_modes(32);
    double t_end = 1.0;
    double dt = 1e-3;
    int sample_every = 1;
    double amplitude_scale = 1.0;
    int threads = 1;
};

struct StudyPoint {
    double mu = 0.0;
    double nu = 0.0;
    double rate = 0.0;
    ErrorReport error;
    double combined = 0.0;
    double data_norm = 0.0;
    double threshold = 0.0;
};

struct ConvergenceStudy {
    SlopeFit fit;
    std::vector<StudyPoint> points;
    double amplitude = 0.0;
    double mu0 = 0.0;  // refined unstable only
};

// Initial data a (cos x + cos(2x)/2) with a at half the smallest threshold over mus.
SpectralField study_initial_data(const GridSpec& grid, double amplitude);
ConvergenceStudy convergence_study(const std::vector<double>& mus, const StudySetup& setup);

SlopeFit remainder_scaling_study(const SpectralField& zeta, const std::vector<double>& mus,
                                 const RegimeParams& params, RemainderVariant variant,
                                 const PicardOptions& opts = {});

}  // namespace muskat
