#include "muskat/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include "muskat/errors.hpp"
#include "muskat/wiener.hpp"

namespace muskat {
namespace {

double margin(Law law, const RegimeParams& p) {
    const double cap = p.capillarity();
    switch (law) {
        case Law::ThinFilm: return cap - p.gravity_sign();
        case Law::RefinedUnstable: return cap + p.mu / 3.0 - 1.0;
        case Law::RefinedStable: return cap - p.mu / 3.0;
        default: throw ConfigError("no energy inequality is available for law " + to_string(law));
    }
}

Law approximating_law(const ModelSpec& m) {
    if (m.law != Law::Muskat) return m.law;
    switch (m.remainder_variant) {
        case RemainderVariant::FirstOrder: return Law::ThinFilm;
        case RemainderVariant::Refined: return Law::RefinedUnstable;
        case RemainderVariant::RefinedStable: return Law::RefinedStable;
    }
    return Law::ThinFilm;
}

}  // namespace

double energy_rate(Law law, const RegimeParams& p) { return margin(law, p) / 64.0; }

double energy_smallness(Law law, const RegimeParams& p, double divisor) {
    const double R = margin(law, p);
    const double cap = p.capillarity();
    const double denom = law == Law::ThinFilm ? cap + 1.0 : cap + 55.0 * p.mu / 6.0 + 1.0;
    return R / (divisor * p.eps * denom);
}

double muskat_smallness(Law approx, const RegimeParams& p) {
    const double R = margin(approx, p);
    return std::min(1.0 / (EstimateConstants::C0 * p.eps), 1.0) * std::sqrt(p.mu) *
           std::min(1.0, p.effective_Bo() * R);
}

double comparison_nu(Law approx, const RegimeParams& p) { return std::sqrt(p.mu) / 32.0 * margin(approx, p); }

double refined_mu0(double bo) {
    const double b = 3.0 / bo;
    const double y = 0.5 * (-b + std::sqrt(b * b + 12.0));
    return y * y;
}

EnergyLedger energy_report(const Trajectory& traj) {
    const Law law = traj.model.law;
    const RegimeParams& p = traj.model.params;
    EnergyLedger led;
    led.rate = energy_rate(law, p);
    led.nu = p.nu;
    if (traj.states.empty()) return led;
    led.initial_norm = wiener_norm(traj.states.front(), {});
    led.small_strict = led.initial_norm < energy_smallness(law, p, 128.0);
    led.small_loose = led.initial_norm < energy_smallness(law, p, 8.0);

    double integral = 0.0, prev4 = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double t = traj.times[i];
        const double n0 = wiener_norm(traj.states[i], {0.0, p.nu * t});
        const double n4 = wiener_norm(traj.states[i], {4.0, p.nu * t});
        if (i > 0) integral += 0.5 * (t - traj.times[i - 1]) * (n4 + prev4);
        prev4 = n4;
        led.times.push_back(t);
        led.norm0.push_back(n0);
        led.norm4_integral.push_back(integral);
        led.inequality_slack.push_back(led.initial_norm - (n0 + led.rate * integral));
        led.decay_slack.push_back(led.initial_norm * std::exp(-led.rate * t) - n0);
    }
    return led;
}

ErrorReport error_norms(const Trajectory& a, const Trajectory& b, double nu) {
    if (a.times.size() != b.times.size()) throw ShapeError("error_norms: sample counts differ");
    ErrorReport r;
    r.mu = a.model.params.mu;
    double prev4 = 0.0;
    for (std::size_t i = 0; i < a.times.size(); ++i) {
        const double t = a.times[i];
        if (std::abs(t - b.times[i]) > 1e-12) throw ShapeError("error_norms: sample times differ");
        const SpectralField d = a.states[i] - b.states[i];
        r.sup_norm0 = std::max(r.sup_norm0, wiener_norm(d, {0.0, nu * t}));
        const double n4 = wiener_norm(d, {4.0, nu * t});
        if (i > 0) r.int_norm4 += 0.5 * (t - a.times[i - 1]) * (n4 + prev4);
        prev4 = n4;
    }
    return r;
}

double decomposition_residual(const SpectralField& zeta, const RegimeParams& params, RemainderVariant variant,
                              const PicardOptions& opts) {
    const SpectralField direct = muskat_rhs_direct(zeta, params, opts);
    const SpectralField split = muskat_rhs(zeta, params, variant, opts);
    return wiener_norm(direct - split, {});
}

SlopeFit fit_slope(const std::vector<double>& mus, const std::vector<double>& errors) {
    SlopeFit fit;
    fit.mus = mus;
    fit.errors = errors;
    if (mus.size() != errors.size() || mus.size() < 2) {
        fit.flag = "need at least two points";
        return fit;
    }
    for (std::size_t i = 1; i < mus.size(); ++i)
        if (!(mus[i] > mus[i - 1])) {
            fit.flag = "mu values must be strictly increasing";
            return fit;
        }
    if (std::all_of(errors.begin(), errors.end(), [](double e) { return e <= 1e-12; })) {
        fit.flag = "identical trajectories";
        return fit;
    }
    if (std::any_of(errors.begin(), errors.end(), [](double e) { return !(e > 0.0); })) {
        fit.flag = "nonpositive error";
        return fit;
    }
    const double n = static_cast<double>(mus.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < mus.size(); ++i) {
        const double x = std::log(mus[i]), y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / n;
    for (std::size_t i = 0; i < mus.size(); ++i) {
        const double y = std::log(errors[i]);
        const double yhat = fit.intercept + fit.slope * std::log(mus[i]);
        ss_res += (y - yhat) * (y - yhat);
        ss_tot += (y - ybar) * (y - ybar);
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    fit.valid = true;
    return fit;
}

SpectralField study_initial_data(const GridSpec& grid, double amplitude) {
    return SpectralField::trig(grid, {0.0, amplitude, 0.5 * amplitude});
}

ConvergenceStudy convergence_study(const std::vector<double>& mus, const StudySetup& setup) {
    if (mus.empty()) throw ValidationError("convergence study needs at least one mu");
    std::vector<double> sorted = mus;
    std::sort(sorted.begin(), sorted.end());
    const Law approx = approximating_law(setup.approximate);

    ConvergenceStudy study;
    const SpectralField shape = study_initial_data(setup.grid, 1.0);
    const double shape_norm = wiener_norm(shape, {1.0, 0.0});
    double threshold = INFINITY;
    for (double mu : sorted) {
        RegimeParams p = setup.reference.params;
        p.mu = mu;
        threshold = std::min(threshold, muskat_smallness(approx, p));
    }
    if (!(threshold > 0.0)) throw ValidationError("smallness threshold is not positive for this regime");
    study.amplitude = 0.5 * setup.amplitude_scale * threshold / shape_norm;
    if (approx == Law::RefinedUnstable) study.mu0 = refined_mu0(setup.approximate.params.bond);
    const SpectralField initial = study_initial_data(setup.grid, study.amplitude);

    const int count = static_cast<int>(sorted.size());
    std::vector<StudyPoint> points(sorted.size());
    std::vector<std::string> failures(sorted.size());
    const int threads = std::max(1, std::min(setup.threads, count));

#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        try {
            const double mu = sorted[i];
            ModelSpec ref = setup.reference, app = setup.approximate;
            ref.params.mu = app.params.mu = mu;
            const double nu = comparison_nu(approx, app.params);
            ref.params.nu = app.params.nu = nu;
            const Trajectory a = integrate(initial, ref, setup.t_end, setup.dt, setup.sample_every);
            const Trajectory b = integrate(initial, app, setup.t_end, setup.dt, setup.sample_every);
            if (a.blew_up || b.blew_up) throw BlowUpError("trajectory blew up", a.blew_up ? a.blow_up_time : b.blow_up_time);
            StudyPoint& pt = points[i];
            pt.mu = mu;
            pt.nu = nu;
            pt.rate = energy_rate(approx, app.params);
            pt.error = error_norms(a, b, nu);
            pt.error.mu = mu;
            pt.combined = pt.error.sup_norm0 + pt.rate * pt.error.int_norm4;
            pt.data_norm = wiener_norm(initial, {1.0, 0.0});
            pt.threshold = muskat_smallness(approx, app.params);
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    }
    for (int i = 0; i < count; ++i)
        if (!failures[i].empty()) {
            std::ostringstream os;
            os << "study run failed at mu = " << sorted[i] << ": " << failures[i];
            throw StudyError(os.str(), sorted[i]);
        }

    std::vector<double> errs;
    for (const StudyPoint& pt : points) errs.push_back(pt.combined);
    study.fit = fit_slope(sorted, errs);
    study.points = std::move(points);
    return study;
}

SlopeFit remainder_scaling_study(const SpectralField& zeta, const std::vector<double>& mus,
                                 const RegimeParams& params, RemainderVariant variant,
                                 const PicardOptions& opts) {
    std::vector<double> sorted = mus;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> norms;
    for (double mu : sorted) {
        RegimeParams p = params;
        p.mu = mu;
        const PotentialResult r = remainder_potential(zeta, p, variant, opts);
        norms.push_back(grad_norm(r.phi, mu));
    }
    SlopeFit fit = fit_slope(sorted, norms);
    if (!fit.valid && fit.flag == "identical trajectories") fit.flag = "all norms vanish";
    return fit;
}

}  // namespace muskat
