#pragma once

#include <string>
#include <vector>

#include "muskat/params.hpp"
#include "muskat/spectral.hpp"
#include "muskat/strip.hpp"

namespace muskat {

enum class Law { Muskat, ThinFilm, RefinedUnstable, RefinedStable, IllPosedSixth };

std::string to_string(Law law);
Law law_from_string(const std::string& name);
std::string to_string(RemainderVariant v);
RemainderVariant variant_from_string(const std::string& name);

struct ModelSpec {
    Law law = Law::ThinFilm;
    RegimeParams params{};
    double remainder_tol = 1e-11;
    RemainderVariant remainder_variant = RemainderVariant::FirstOrder;
    int n_z = 33;
    int max_iter = 50;

    // Throws ValidationError naming the violated regime constraint.
    void validate() const;
    PicardOptions picard() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<SpectralField> states;
    double dt = 0.0;
    ModelSpec model{};
    bool blew_up = false;
    double blow_up_time = 0.0;
    std::vector<std::string> notes;
};

// Growth rate of mode n under the linearized law. For Muskat this is the exact
// linearization (g n^2 - n^4/Bo) tanh(sqrt(mu)|n|)/(sqrt(mu)|n|).
double linear_symbol(const ModelSpec& model, int n);

SpectralField thin_film_rhs(const SpectralField& zeta, const RegimeParams& p);
SpectralField refined_rhs(const SpectralField& zeta, const RegimeParams& p);
SpectralField ill_posed_rhs(const SpectralField& zeta, const RegimeParams& p);
// Muskat right-hand side from the decomposition named by the variant.
SpectralField muskat_rhs(const SpectralField& zeta, const RegimeParams& p, RemainderVariant variant,
                         const PicardOptions& opts);
// Muskat right-hand side from the full flattened potential, without decomposition.
SpectralField muskat_rhs_direct(const SpectralField& zeta, const RegimeParams& p, const PicardOptions& opts);

SpectralField rhs(const ModelSpec& model, const SpectralField& zeta);

// One ETDRK2 step. t is only used to label a blow-up.
SpectralField step(const SpectralField& state, double dt, const ModelSpec& model, double t = 0.0);

Trajectory integrate(const SpectralField& initial, const ModelSpec& model, double t_end, double dt,
                     int sample_every);

// Startup self-convergence check; returns dt or dt/2.
double select_dt(const SpectralField& initial, const ModelSpec& model, double dt);

}  // namespace muskat
