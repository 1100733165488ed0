#include "muskat/evolution.hpp"

#include <cmath>
#include <sstream>

#include "muskat/errors.hpp"

namespace muskat {
namespace {

SpectralField unit(const GridSpec& g) {
    SpectralField one(g);
    one.set(0, 1.0);
    return one;
}

bool finite(const SpectralField& f) {
    for (Complex c : f.coeffs())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

}  // namespace

std::string to_string(Law law) {
    switch (law) {
        case Law::Muskat: return "muskat";
        case Law::ThinFilm: return "thin_film";
        case Law::RefinedUnstable: return "refined_unstable";
        case Law::RefinedStable: return "refined_stable";
        case Law::IllPosedSixth: return "ill_posed_sixth";
    }
    return "unknown";
}

Law law_from_string(const std::string& name) {
    for (Law l : {Law::Muskat, Law::ThinFilm, Law::RefinedUnstable, Law::RefinedStable, Law::IllPosedSixth})
        if (to_string(l) == name) return l;
    throw ValidationError("unknown law '" + name + "'");
}

std::string to_string(RemainderVariant v) {
    switch (v) {
        case RemainderVariant::FirstOrder: return "first_order";
        case RemainderVariant::Refined: return "refined";
        case RemainderVariant::RefinedStable: return "refined_stable";
    }
    return "unknown";
}

RemainderVariant variant_from_string(const std::string& name) {
    for (RemainderVariant v : {RemainderVariant::FirstOrder, RemainderVariant::Refined, RemainderVariant::RefinedStable})
        if (to_string(v) == name) return v;
    throw ValidationError("unknown remainder variant '" + name + "'");
}

void RegimeParams::validate_basic() const {
    require(mu > 0.0 && mu < 1.0, "mu must lie in (0,1)");
    require(eps > 0.0 && eps <= 1.0, "eps must lie in (0,1]");
    require(bond > 0.0, regime == BondRegime::OrderOne ? "Bo must be positive" : "bo must be positive");
    require(nu >= 0.0, "nu must be nonnegative");
}

void ModelSpec::validate() const {
    params.validate_basic();
    const RegimeParams& p = params;
    const double sq = std::sqrt(p.mu);
    const bool order_one = p.regime == BondRegime::OrderOne;
    auto unstable_bo = [&] { require(p.bond > 0.0 && p.bond < 1.0, "Bo must lie in (0,1) in the unstable order-one regime"); };
    auto unstable_resc = [&] { require(sq / p.bond + p.mu / 3.0 > 1.0, "sqrt(mu)/bo + mu/3 must exceed 1"); };
    auto stable_resc = [&] { require(sq / p.bond - p.mu / 3.0 > 0.0, "sqrt(mu)/bo - mu/3 must be positive"); };
    require(remainder_tol > 0.0, "remainder_tol must be positive");
    require(max_iter >= 1, "max_iter must be at least 1");
    ZGrid check(n_z);

    switch (law) {
        case Law::ThinFilm:
            require(order_one, "thin_film uses the order-one Bond number Bo");
            if (!p.stable) unstable_bo();
            break;
        case Law::IllPosedSixth:
            require(order_one, "ill_posed_sixth uses the order-one Bond number Bo");
            require(!p.stable, "ill_posed_sixth is defined for the unstable configuration");
            break;
        case Law::RefinedUnstable:
            require(!order_one, "refined_unstable uses the rescaled Bond number bo");
            require(!p.stable, "refined_unstable requires the unstable configuration");
            unstable_resc();
            break;
        case Law::RefinedStable:
            require(!order_one, "refined_stable uses the rescaled Bond number bo");
            require(p.stable, "refined_stable requires the stable configuration");
            stable_resc();
            break;
        case Law::Muskat:
            if (remainder_variant == RemainderVariant::Refined)
                require(!order_one && !p.stable, "refined variant needs the unstable rescaled regime");
            if (remainder_variant == RemainderVariant::RefinedStable)
                require(!order_one && p.stable, "refined_stable variant needs the stable rescaled regime");
            if (order_one && !p.stable) unstable_bo();
            if (!order_one) p.stable ? stable_resc() : unstable_resc();
            break;
    }
}

PicardOptions ModelSpec::picard() const {
    PicardOptions o;
    o.tol = remainder_tol;
    o.max_iter = max_iter;
    o.zgrid = ZGrid(n_z);
    return o;
}

double linear_symbol(const ModelSpec& model, int n) {
    const RegimeParams& p = model.params;
    const double k2 = double(n) * n, k4 = k2 * k2, k6 = k4 * k2;
    const double g = p.gravity_sign();
    const double cap = p.capillarity();
    switch (model.law) {
        case Law::ThinFilm: return g * k2 - cap * k4;
        case Law::RefinedUnstable: return k2 - (cap + p.mu / 3.0) * k4;
        case Law::RefinedStable: return -k2 - (cap - p.mu / 3.0) * k4;
        case Law::IllPosedSixth: return k2 - (cap + p.mu / 3.0) * k4 + (p.mu * cap / 3.0) * k6;
        case Law::Muskat: {
            if (n == 0) return 0.0;
            const double a = std::sqrt(p.mu) * std::abs(n);
            return (g * k2 - cap * k4) * std::tanh(a) / a;
        }
    }
    return 0.0;
}

SpectralField thin_film_rhs(const SpectralField& zeta, const RegimeParams& p) {
    const SpectralField J = unit(zeta.grid()) + p.eps * zeta;
    const SpectralField drive = p.gravity_sign() * derivative(zeta, 1) + p.capillarity() * derivative(zeta, 3);
    return -derivative(multiply(J, drive), 1);
}

SpectralField refined_rhs(const SpectralField& zeta, const RegimeParams& p) {
    const SpectralField J = unit(zeta.grid()) + p.eps * zeta;
    const SpectralField J3 = multiply(multiply(J, J), J);
    const SpectralField correction = derivative(multiply(J3, derivative(zeta, 2)), 2);
    return thin_film_rhs(zeta, p) - (p.gravity_sign() * p.mu / 3.0) * correction;
}

SpectralField ill_posed_rhs(const SpectralField& zeta, const RegimeParams& p) {
    const double cap = p.capillarity();
    const SpectralField J = unit(zeta.grid()) + p.eps * zeta;
    const SpectralField J3 = multiply(multiply(J, J), J);
    const SpectralField zx = derivative(zeta, 1);
    const SpectralField inner = derivative(zeta, 2) + cap * derivative(zeta, 4);
    const SpectralField cubic = multiply(multiply(zx, zx), derivative(zeta, 2));
    return thin_film_rhs(zeta, p) - (p.mu / 3.0) * derivative(multiply(J3, inner), 2) +
           (1.5 * p.eps * p.eps * p.mu * cap) * derivative(multiply(J, derivative(cubic, 1)), 1);
}

SpectralField muskat_rhs(const SpectralField& zeta, const RegimeParams& p, RemainderVariant variant,
                         const PicardOptions& opts) {
    const PotentialResult r = remainder_potential(zeta, p, variant, opts);
    const SpectralField approx =
        variant == RemainderVariant::FirstOrder ? thin_film_rhs(zeta, p) : refined_rhs(zeta, p);
    return approx - (1.0 / p.eps) * remainder_flux(zeta, r.phi, p.eps);
}

SpectralField muskat_rhs_direct(const SpectralField& zeta, const RegimeParams& p, const PicardOptions& opts) {
    const PotentialResult r = full_potential(zeta, p, opts);
    return -(1.0 / p.eps) * remainder_flux(zeta, r.phi, p.eps);
}

SpectralField rhs(const ModelSpec& model, const SpectralField& zeta) {
    switch (model.law) {
        case Law::ThinFilm: return thin_film_rhs(zeta, model.params);
        case Law::RefinedUnstable:
        case Law::RefinedStable: return refined_rhs(zeta, model.params);
        case Law::IllPosedSixth: return ill_posed_rhs(zeta, model.params);
        case Law::Muskat: return muskat_rhs(zeta, model.params, model.remainder_variant, model.picard());
    }
    return zeta;
}

namespace {

// phi1(z) = (e^z - 1)/z, phi2(z) = (e^z - 1 - z)/z^2
struct EtdCoefficients {
    std::vector<double> L, E, P1, P2;  // index n = 0..n_modes
};

EtdCoefficients etd_coefficients(const ModelSpec& model, int n_modes, double dt) {
    EtdCoefficients c;
    for (int n = 0; n <= n_modes; ++n) {
        const double L = linear_symbol(model, n);
        const double z = L * dt;
        double p1, p2;
        if (std::abs(z) < 1e-4) {
            p1 = 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
            p2 = 0.5 + z / 6.0 + z * z / 24.0 + z * z * z / 120.0;
        } else {
            const double em1 = std::expm1(z);
            p1 = em1 / z;
            p2 = (em1 - z) / (z * z);
        }
        c.L.push_back(L);
        c.E.push_back(std::exp(z));
        c.P1.push_back(dt * p1);
        c.P2.push_back(dt * p2);
    }
    return c;
}

SpectralField nonlinear_part(const ModelSpec& model, const SpectralField& u, const EtdCoefficients& c) {
    SpectralField r = rhs(model, u);
    for (int n = 1; n <= u.n_modes(); ++n) r.set(n, r[n] - c.L[n] * u[n]);
    return r;
}

// Exact zeros stay zero even where e^{L dt} overflows.
Complex times(double w, Complex v) { return v == Complex(0.0) ? v : w * v; }

SpectralField etd_step(const SpectralField& u, const ModelSpec& model, const EtdCoefficients& c, double t) {
    try {
        const SpectralField Nu = nonlinear_part(model, u, c);
        SpectralField a(u.grid());
        a.set(0, u[0] + c.P1[0] * Nu[0]);
        for (int n = 1; n <= u.n_modes(); ++n) a.set(n, times(c.E[n], u[n]) + times(c.P1[n], Nu[n]));
        if (!finite(a)) throw BlowUpError("non-finite state", t);
        const SpectralField Na = nonlinear_part(model, a, c);
        SpectralField out(u.grid());
        out.set(0, a[0] + c.P2[0] * (Na[0] - Nu[0]));
        for (int n = 1; n <= u.n_modes(); ++n) out.set(n, a[n] + times(c.P2[n], Na[n] - Nu[n]));
        if (!finite(out)) throw BlowUpError("non-finite state", t);
        return out;
    } catch (const InvariantError&) {
        throw BlowUpError("non-finite state", t);
    }
}

}  // namespace

SpectralField step(const SpectralField& state, double dt, const ModelSpec& model, double t) {
    if (!(dt > 0.0)) throw ParameterError("dt must be positive");
    return etd_step(state, model, etd_coefficients(model, state.n_modes(), dt), t + dt);
}

Trajectory integrate(const SpectralField& initial, const ModelSpec& model, double t_end, double dt,
                     int sample_every) {
    model.validate();
    if (!(t_end > 0.0) || !(dt > 0.0)) throw ValidationError("t_end and dt must be positive");
    if (sample_every < 1) throw ValidationError("sample_every must be at least 1");
    if (std::abs(initial[0]) > 1e-14) throw ValidationError("initial data must have zero mean");

    Trajectory traj;
    traj.model = model;
    if (model.law == Law::IllPosedSixth && t_end > 0.1) {
        t_end = 0.1;
        traj.notes.push_back("t_end capped at 0.1 for the ill-posed law");
    }
    const long steps = std::max(1L, std::lround(std::ceil(t_end / dt - 1e-9)));
    const double h = t_end / static_cast<double>(steps);
    traj.dt = h;
    const EtdCoefficients c = etd_coefficients(model, initial.n_modes(), h);

    SpectralField u = initial;
    traj.times.push_back(0.0);
    traj.states.push_back(u);
    for (long k = 1; k <= steps; ++k) {
        const double t = h * static_cast<double>(k);
        try {
            u = etd_step(u, model, c, t);
        } catch (const BlowUpError& e) {
            traj.blew_up = true;
            traj.blow_up_time = e.time();
            std::ostringstream os;
            os << "blow-up detected at t = " << e.time();
            traj.notes.push_back(os.str());
            return traj;
        }
        if (k % sample_every == 0 || k == steps) {
            traj.times.push_back(t);
            traj.states.push_back(u);
        }
    }
    return traj;
}

double select_dt(const SpectralField& initial, const ModelSpec& model, double dt) {
    auto advance = [&](double h, int k) {
        SpectralField u = initial;
        for (int i = 0; i < k; ++i) u = step(u, h, model);
        return u;
    };
    const double scale = std::max(wiener_norm(initial, {}), 1e-300);
    const double e1 = wiener_norm(advance(dt, 1) - advance(dt / 2, 2), {});
    const double e2 = wiener_norm(advance(dt / 2, 2) - advance(dt / 4, 4), {});
    const bool ok = e1 <= 1e-8 * scale || e1 >= 3.5 * e2;
    return ok ? dt : dt / 2;
}

}  // namespace muskat
