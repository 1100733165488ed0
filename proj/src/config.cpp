#include "muskat/config.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

#include "muskat/diagnostics.hpp"
#include "muskat/errors.hpp"
#include "muskat/estimates.hpp"
#include "muskat/io.hpp"

namespace muskat {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// JSON object view that rejects keys nobody asked about.
class Section {
public:
    Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError(path_ + " must be a JSON object");
    }

    bool has(const std::string& key) {
        seen_.insert(key);
        return j_.contains(key);
    }

    template <class T>
    T get(const std::string& key, const T& fallback) {
        return has(key) ? convert<T>(key) : fallback;
    }

    template <class T>
    T require(const std::string& key) {
        if (!has(key)) throw ConfigError("missing required key " + where(key));
        return convert<T>(key);
    }

    const json& raw(const std::string& key) {
        seen_.insert(key);
        if (!j_.contains(key)) throw ConfigError("missing required key " + where(key));
        return j_.at(key);
    }

    std::string where(const std::string& key) const { return path_ + "." + key; }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key())) throw ConfigError("unknown key " + where(it.key()));
    }

private:
    template <class T>
    T convert(const std::string& key) {
        try {
            return j_.at(key).get<T>();
        } catch (const json::exception&) {
            throw ConfigError("wrong type for " + where(key));
        }
    }

    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

void check(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

ModelSpec parse_model(const json& j, const std::string& path, int n_z) {
    Section s(j, path);
    ModelSpec m;
    m.law = law_from_string(s.require<std::string>("law"));
    const bool has_Bo = s.has("Bo"), has_bo = s.has("bo");
    if (has_Bo == has_bo) throw ValidationError(path + ": give exactly one of Bo (order-one) or bo (rescaled)");
    RegimeParams& p = m.params;
    p.mu = s.require<double>("mu");
    p.eps = s.get<double>("eps", 1.0);
    p.regime = has_Bo ? BondRegime::OrderOne : BondRegime::Rescaled;
    p.bond = s.require<double>(has_Bo ? "Bo" : "bo");
    p.stable = s.get<bool>("stable", m.law == Law::RefinedStable);
    if (m.law == Law::Muskat) {
        const RemainderVariant fallback = has_Bo ? RemainderVariant::FirstOrder
                                          : p.stable ? RemainderVariant::RefinedStable
                                                     : RemainderVariant::Refined;
        m.remainder_variant = s.has("remainder_variant")
                                  ? variant_from_string(s.require<std::string>("remainder_variant"))
                                  : fallback;
    } else if (s.has("remainder_variant")) {
        throw ValidationError(s.where("remainder_variant") + " applies to the muskat law only");
    }
    m.remainder_tol = s.get<double>("remainder_tol", m.remainder_tol);
    m.max_iter = s.get<int>("max_iter", m.max_iter);
    m.n_z = n_z;
    const bool explicit_nu = s.has("nu");
    p.nu = explicit_nu ? s.require<double>("nu") : 0.0;
    s.finish();
    try {
        m.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
    if (!explicit_nu) p.nu = default_nu(m);
    return m;
}

Law approximating(const ModelSpec& m) {
    if (m.law != Law::Muskat) return m.law;
    switch (m.remainder_variant) {
        case RemainderVariant::FirstOrder: return Law::ThinFilm;
        case RemainderVariant::Refined: return Law::RefinedUnstable;
        case RemainderVariant::RefinedStable: return Law::RefinedStable;
    }
    return Law::ThinFilm;
}

bool has_energy_law(Law law) {
    return law == Law::ThinFilm || law == Law::RefinedUnstable || law == Law::RefinedStable;
}

SpectralField shape(const GridSpec& grid) { return study_initial_data(grid, 1.0); }

ordered_json params_json(const ModelSpec& m) {
    const RegimeParams& p = m.params;
    ordered_json j;
    j["law"] = to_string(m.law);
    j["mu"] = p.mu;
    j["eps"] = p.eps;
    j[p.regime == BondRegime::OrderOne ? "Bo" : "bo"] = p.bond;
    j["nu"] = p.nu;
    j["stable"] = p.stable;
    if (m.law == Law::Muskat) {
        j["remainder_variant"] = to_string(m.remainder_variant);
        j["remainder_tol"] = m.remainder_tol;
        j["n_z"] = m.n_z;
    }
    if (p.stable)
        j["assumption"] = "stable configuration realized by flipping the sign of the gravity term";
    return j;
}

std::string with_constraints(const std::string& constraints, const std::string& csv) {
    return "# constraints: " + constraints + "\n" + csv;
}

class Writer {
public:
    explicit Writer(std::filesystem::path dir) : dir_(std::move(dir)) {}
    void put(const std::string& name, const std::string& text) {
        io::write_text(dir_ / name, text);
        files_.push_back(dir_ / name);
    }
    std::vector<std::filesystem::path> files() const { return files_; }

private:
    std::filesystem::path dir_;
    std::vector<std::filesystem::path> files_;
};

ordered_json header(const RunConfig& cfg, const std::string& constraints) {
    ordered_json j;
    j["schema_version"] = RunConfig::kSchemaVersion;
    j["command"] = to_string(cfg.command);
    j["constraints"] = constraints;
    j["seed"] = cfg.seed;
    j["grid"] = {{"n_modes", cfg.grid.n_modes}, {"n_phys", cfg.grid.n_phys}};
    return j;
}

int run_simulate(const RunConfig& cfg, Writer& out) {
    const std::string cons = constraint_set(cfg.model);
    const SpectralField initial = resolve_initial(cfg);
    const double dt = cfg.auto_dt ? select_dt(initial, cfg.model, cfg.dt) : cfg.dt;
    const Trajectory traj = integrate(initial, cfg.model, cfg.t_end, dt, cfg.sample_every);
    out.put("trajectory.csv", with_constraints(cons, io::trajectory_csv(traj)));

    ordered_json s = header(cfg, cons);
    s["model"] = params_json(cfg.model);
    s["dt"] = dt;
    s["t_end"] = cfg.t_end;
    s["samples"] = traj.times.size();
    s["initial_norm_1_0"] = wiener_norm(initial, {1.0, 0.0});
    const SpectralField& last = traj.states.back();
    const double t_last = traj.times.back();
    s["final_time"] = t_last;
    s["final_norm_0_nut"] = wiener_norm(last, {0.0, cfg.model.params.nu * t_last});
    s["mass_drift"] = std::abs(last[0] - initial[0]);
    s["blew_up"] = traj.blew_up;
    if (traj.blew_up) s["blow_up_time"] = traj.blow_up_time;
    s["notes"] = traj.notes;
    if (has_energy_law(cfg.model.law)) {
        const EnergyLedger led = energy_report(traj);
        out.put("ledger.csv", with_constraints(cons, io::ledger_csv(led)));
        double worst_ineq = INFINITY, worst_decay = INFINITY;
        for (std::size_t i = 0; i < led.times.size(); ++i) {
            worst_ineq = std::min(worst_ineq, led.inequality_slack[i]);
            worst_decay = std::min(worst_decay, led.decay_slack[i]);
        }
        s["ledger"] = {{"rate", led.rate},
                       {"nu", led.nu},
                       {"initial_norm_0_0", led.initial_norm},
                       {"small_divisor_128", led.small_strict},
                       {"small_divisor_8", led.small_loose},
                       {"min_inequality_slack", worst_ineq},
                       {"min_decay_slack", worst_decay}};
    }
    out.put("summary.json", io::dump(s));
    if (!traj.blew_up) return 0;
    write_error(cfg.output_dir, BlowUpError("trajectory blew up", traj.blow_up_time));
    return 3;
}

int run_compare(const RunConfig& cfg, Writer& out) {
    const ModelSpec& ref = *cfg.reference;
    const std::string cons = constraint_set(ref) + "; " + constraint_set(cfg.model);
    const SpectralField initial = resolve_initial(cfg);
    const double dt = cfg.auto_dt ? select_dt(initial, cfg.model, cfg.dt) : cfg.dt;
    ModelSpec a = ref, b = cfg.model;
    const double nu = comparison_nu(approximating(ref), ref.params);
    a.params.nu = b.params.nu = nu;
    const Trajectory ta = integrate(initial, a, cfg.t_end, dt, cfg.sample_every);
    const Trajectory tb = integrate(initial, b, cfg.t_end, dt, cfg.sample_every);
    const std::string second = io::trajectory_csv(tb, to_string(b.law));
    out.put("trajectory.csv", with_constraints(cons, io::trajectory_csv(ta, to_string(a.law)) +
                                                         second.substr(second.find('\n') + 1)));
    ordered_json s = header(cfg, cons);
    s["reference"] = params_json(a);
    s["approximate"] = params_json(b);
    s["dt"] = dt;
    s["nu"] = nu;
    if (ta.blew_up || tb.blew_up) {
        s["blew_up"] = true;
        out.put("summary.json", io::dump(s));
        return 3;
    }
    const ErrorReport e = error_norms(ta, tb, nu);
    const double rate = energy_rate(approximating(ref), b.params);
    s["error"] = {{"sup_norm0", e.sup_norm0},
                  {"int_norm4", e.int_norm4},
                  {"rate", rate},
                  {"combined", e.sup_norm0 + rate * e.int_norm4}};
    out.put("summary.json", io::dump(s));
    return 0;
}

int run_convergence(const RunConfig& cfg, Writer& out) {
    StudySetup setup;
    setup.reference = *cfg.reference;
    setup.approximate = cfg.model;
    setup.grid = cfg.grid;
    setup.t_end = cfg.t_end;
    setup.dt = cfg.dt;
    setup.sample_every = cfg.sample_every;
    setup.amplitude_scale = cfg.amplitude_scale;
    setup.threads = thread_budget();
    const std::string cons = constraint_set(setup.reference) + "; " + constraint_set(setup.approximate);
    const ConvergenceStudy study = convergence_study(cfg.mus, setup);
    out.put("slopes.csv", with_constraints(cons, io::slopes_csv(study)));
    ordered_json s = header(cfg, cons);
    s["reference"] = params_json(setup.reference);
    s["approximate"] = params_json(setup.approximate);
    s["mus"] = cfg.mus;
    s["t_end"] = cfg.t_end;
    s["dt"] = cfg.dt;
    s["amplitude"] = study.amplitude;
    if (study.mu0 > 0.0) {
        s["mu0"] = study.mu0;
        s["mu_above_mu0"] = cfg.mus.front() >= study.mu0;
    }
    s["slope"] = study.fit.slope;
    s["intercept"] = study.fit.intercept;
    s["r_squared"] = study.fit.r_squared;
    s["valid"] = study.fit.valid;
    if (!study.fit.flag.empty()) s["flag"] = study.fit.flag;
    out.put("summary.json", io::dump(s));
    return 0;
}

int run_estimates(const RunConfig& cfg, Writer& out) {
    std::vector<InequalityReport> all;
    const ZGrid zg(cfg.model.n_z);
    std::uint64_t salt = 0;
    for (const std::string& suite : cfg.suites) {
        std::vector<InequalityReport> r;
        if (suite == "wiener") r = wiener_draws(cfg.draws, cfg.seed + salt, cfg.grid);
        else if (suite == "elliptic") r = elliptic_draws(cfg.draws, cfg.seed + salt, cfg.grid, zg);
        else if (suite == "strip") r = strip_draws(cfg.draws, cfg.seed + salt, cfg.grid, zg);
        else if (suite == "solver") r = solver_checks();
        else if (suite == "remainder")
            r = remainder_checks(resolve_initial(cfg), cfg.mus, cfg.model.params, cfg.model.remainder_variant,
                                 cfg.model.picard());
        else {
            const RemainderVariant refined =
                cfg.model.params.stable ? RemainderVariant::RefinedStable : RemainderVariant::Refined;
            r = decomposition_checks(resolve_initial(cfg), cfg.model.params, {RemainderVariant::FirstOrder, refined},
                                     cfg.model.picard());
        }
        all.insert(all.end(), r.begin(), r.end());
        ++salt;
    }
    std::string cons = "Wiener algebra constants K_s, K_{s,n}; elliptic constant 10; s, lambda >= 0";
    if (cfg.model.law == Law::Muskat) cons += "; " + constraint_set(cfg.model);
    out.put("inequalities.csv", with_constraints(cons, io::inequalities_csv(all)));
    ordered_json s = header(cfg, cons);
    s["draws"] = cfg.draws;
    s["suites"] = cfg.suites;
    s["checks"] = all.size();
    std::size_t violations = 0;
    double worst = INFINITY;
    for (const InequalityReport& r : all) {
        violations += r.holds ? 0 : 1;
        worst = std::min(worst, r.slack);
    }
    s["violations"] = violations;
    s["min_slack"] = worst;
    out.put("summary.json", io::dump(s));
    return 0;
}

int run_dispersion(const RunConfig& cfg, Writer& out) {
    const std::string cons = constraint_set(cfg.model);
    std::ostringstream csv;
    csv << "n,symbol\n";
    ordered_json rows = ordered_json::array();
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const double v = linear_symbol(cfg.model, n);
        csv << n << ',' << io::fmt(v) << '\n';
        rows.push_back({n, v});
    }
    out.put("dispersion.csv", with_constraints(cons, csv.str()));
    ordered_json s = header(cfg, cons);
    s["model"] = params_json(cfg.model);
    s["symbol"] = std::move(rows);
    out.put("summary.json", io::dump(s));
    return 0;
}

}  // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::Simulate: return "simulate";
        case Command::Compare: return "compare";
        case Command::Convergence: return "convergence";
        case Command::VerifyEstimates: return "verify-estimates";
        case Command::Dispersion: return "dispersion";
    }
    return "?";
}

Command command_from_string(const std::string& name) {
    for (Command c : {Command::Simulate, Command::Compare, Command::Convergence, Command::VerifyEstimates,
                      Command::Dispersion})
        if (to_string(c) == name) return c;
    throw ConfigError("unknown command '" + name + "'");
}

double default_nu(const ModelSpec& model) {
    const RegimeParams& p = model.params;
    switch (model.law) {
        case Law::IllPosedSixth: return 0.0;
        case Law::Muskat: return comparison_nu(approximating(model), p);
        default: return energy_rate(model.law, p) * 64.0 / 4.0;
    }
}

std::string constraint_set(const ModelSpec& model) {
    const RegimeParams& p = model.params;
    std::string s = to_string(model.law) + ": mu in (0,1), eps in (0,1]";
    if (p.regime == BondRegime::OrderOne) {
        if (!p.stable && model.law != Law::IllPosedSixth) s += ", 0 < Bo < 1";
        else s += ", Bo > 0";
    } else {
        s += p.stable ? ", sqrt(mu)/bo - mu/3 > 0" : ", sqrt(mu)/bo + mu/3 > 1";
    }
    s += p.stable ? ", stable" : ", unstable";
    return s;
}

SpectralField resolve_initial(const RunConfig& cfg) {
    const InitialData& d = cfg.initial;
    if (!d.auto_smallness) return SpectralField::trig(cfg.grid, d.cos_amp, d.sin_amp);
    const ModelSpec& m = cfg.reference ? *cfg.reference : cfg.model;
    const SpectralField base = shape(cfg.grid);
    double amplitude = 0.0;
    if (m.law == Law::Muskat) {
        amplitude = d.scale * muskat_smallness(approximating(m), m.params) / wiener_norm(base, {1.0, 0.0});
    } else if (has_energy_law(m.law)) {
        amplitude = d.scale * energy_smallness(m.law, m.params) / wiener_norm(base, {});
    } else {
        throw ValidationError("initial.kind auto-smallness is unavailable for law " + to_string(m.law));
    }
    check(amplitude > 0.0, "initial.kind auto-smallness: threshold is not positive");
    return amplitude * base;
}

int thread_budget() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("MUSKAT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) n = cap;
    }
    return std::max(1, n);
}

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    Section root(doc, "config");
    RunConfig cfg;
    const int version = root.require<int>("schema_version");
    if (version != RunConfig::kSchemaVersion)
        throw ConfigError("unsupported schema_version " + std::to_string(version));
    cfg.command = command_from_string(root.require<std::string>("command"));

    const int n_z = root.get<int>("n_z", 33);
    if (root.has("grid")) {
        Section g(root.raw("grid"), "config.grid");
        const int n_modes = g.get<int>("n_modes", 64);
        check(n_modes >= 4, "grid.n_modes must be at least 4");
        cfg.grid = GridSpec::with_modes(n_modes);
        cfg.grid.n_phys = g.get<int>("n_phys", cfg.grid.n_phys);
        g.finish();
    } else {
        cfg.grid = GridSpec::with_modes(64);
    }
    try {
        cfg.grid.validate();
        ZGrid check_z(n_z);
    } catch (const Error& e) {
        throw ValidationError(std::string("grid: ") + e.what());
    }

    cfg.model = parse_model(root.raw("model"), "config.model", n_z);
    if (root.has("reference")) cfg.reference = parse_model(root.raw("reference"), "config.reference", n_z);

    if (root.has("time")) {
        Section t(root.raw("time"), "config.time");
        cfg.t_end = t.get<double>("t_end", cfg.t_end);
        cfg.dt = t.get<double>("dt", cfg.dt);
        cfg.sample_every = t.get<int>("sample_every", cfg.sample_every);
        cfg.auto_dt = t.get<bool>("auto_dt", cfg.auto_dt);
        t.finish();
    }
    check(cfg.t_end > 0.0, "time.t_end must be positive");
    check(cfg.dt > 0.0, "time.dt must be positive");
    check(cfg.sample_every >= 1, "time.sample_every must be at least 1");

    if (root.has("initial")) {
        Section in(root.raw("initial"), "config.initial");
        const std::string kind = in.require<std::string>("kind");
        if (kind == "auto-smallness") {
            cfg.initial.auto_smallness = true;
            cfg.initial.scale = in.get<double>("scale", cfg.initial.scale);
            check(cfg.initial.scale > 0.0 && cfg.initial.scale <= 1.0, "initial.scale must lie in (0,1]");
        } else if (kind == "modes") {
            for (const json& m : in.raw("modes")) {
                Section e(m, "config.initial.modes[]");
                const int n = e.require<int>("n");
                check(n >= 1 && n <= cfg.grid.n_modes, "initial.modes[].n must lie in [1, n_modes]");
                auto& c = cfg.initial.cos_amp;
                auto& sn = cfg.initial.sin_amp;
                if (static_cast<int>(c.size()) <= n) c.resize(n + 1, 0.0);
                if (static_cast<int>(sn.size()) <= n) sn.resize(n + 1, 0.0);
                c[n] += e.get<double>("cos", 0.0);
                sn[n] += e.get<double>("sin", 0.0);
                e.finish();
            }
        } else {
            throw ConfigError("config.initial.kind must be 'modes' or 'auto-smallness'");
        }
        in.finish();
    } else {
        cfg.initial.auto_smallness = true;
    }

    cfg.mus = root.get<std::vector<double>>("mus", {});
    for (double mu : cfg.mus) check(mu > 0.0 && mu < 1.0, "mus entries must lie in (0,1)");
    if (root.has("study")) {
        Section st(root.raw("study"), "config.study");
        cfg.amplitude_scale = st.get<double>("amplitude_scale", cfg.amplitude_scale);
        st.finish();
    }
    if (root.has("estimates")) {
        Section e(root.raw("estimates"), "config.estimates");
        cfg.draws = e.get<int>("draws", cfg.draws);
        cfg.suites = e.get<std::vector<std::string>>("suites", cfg.suites);
        e.finish();
    }
    check(cfg.draws >= 1, "estimates.draws must be at least 1");
    for (const std::string& s : cfg.suites) {
        if (s != "wiener" && s != "elliptic" && s != "strip" && s != "solver" && s != "remainder" &&
            s != "decomposition")
            throw ConfigError("unknown estimate suite '" + s + "'");
        if ((s == "remainder" || s == "decomposition") && cfg.model.law != Law::Muskat)
            throw ValidationError("estimate suite '" + s + "' needs a muskat model");
        if (s == "remainder" && cfg.mus.size() < 2)
            throw ValidationError("estimate suite 'remainder' needs at least two mus");
    }
    if (root.has("dispersion")) {
        Section d(root.raw("dispersion"), "config.dispersion");
        cfg.n_min = d.get<int>("n_min", cfg.n_min);
        cfg.n_max = d.get<int>("n_max", cfg.n_max);
        d.finish();
    }
    if (cfg.command == Command::Dispersion)
        check(cfg.n_min >= 0 && cfg.n_min <= cfg.n_max && cfg.n_max <= cfg.grid.n_modes,
              "dispersion range must satisfy 0 <= n_min <= n_max <= n_modes");
    cfg.output_dir = root.get<std::string>("output", cfg.output_dir.string());
    cfg.seed = root.get<std::uint64_t>("seed", cfg.seed);
    root.finish();

    if (cfg.command == Command::Compare || cfg.command == Command::Convergence) {
        if (!cfg.reference) throw ValidationError("config.reference is required for " + to_string(cfg.command));
        check(cfg.reference->law == Law::Muskat, "config.reference.law must be muskat");
        check(approximating(*cfg.reference) == cfg.model.law,
              "config.model.law must match the reference remainder_variant");
    }
    if (cfg.command == Command::Convergence) check(cfg.mus.size() >= 2, "convergence needs at least two mus");
    // Study parameters are re-validated at every mu.
    for (double mu : cfg.mus)
        for (const ModelSpec* m : {&cfg.model, cfg.reference ? &*cfg.reference : nullptr}) {
            if (!m) continue;
            ModelSpec probe = *m;
            probe.params.mu = mu;
            try {
                probe.validate();
            } catch (const ValidationError& e) {
                std::ostringstream os;
                os << "mus entry " << mu << ": " << e.what();
                throw ValidationError(os.str());
            }
        }
    return cfg;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const IoError*>(&e)) return 4;
    if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const ConfigError*>(&e) ||
        dynamic_cast<const ParameterError*>(&e) || dynamic_cast<const ShapeError*>(&e))
        return 2;
    if (dynamic_cast<const ConvergenceError*>(&e) || dynamic_cast<const BlowUpError*>(&e) ||
        dynamic_cast<const StudyError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
        dynamic_cast<const InvariantError*>(&e))
        return 3;
    return 1;
}

void write_error(const std::filesystem::path& dir, const std::exception& e) {
    ordered_json j;
    const int code = exit_code_for(e);
    j["exit_code"] = code;
    j["category"] = code == 2 ? "validation" : code == 3 ? "numerical" : code == 4 ? "io" : "internal";
    j["message"] = e.what();
    if (auto* c = dynamic_cast<const ConvergenceError*>(&e)) j["last_gap"] = c->last_gap();
    if (auto* b = dynamic_cast<const BlowUpError*>(&e)) j["time"] = b->time();
    if (auto* s = dynamic_cast<const StudyError*>(&e)) j["mu"] = s->mu();
    try {
        io::write_text(dir / "error.json", io::dump(j));
    } catch (const IoError&) {
    }
}

RunResult run(const RunConfig& cfg) {
    Writer out(cfg.output_dir);
    RunResult result;
    try {
        switch (cfg.command) {
            case Command::Simulate: result.exit_code = run_simulate(cfg, out); break;
            case Command::Compare: result.exit_code = run_compare(cfg, out); break;
            case Command::Convergence: result.exit_code = run_convergence(cfg, out); break;
            case Command::VerifyEstimates: result.exit_code = run_estimates(cfg, out); break;
            case Command::Dispersion: result.exit_code = run_dispersion(cfg, out); break;
        }
    } catch (const std::exception& e) {
        write_error(cfg.output_dir, e);
        result.exit_code = exit_code_for(e);
    }
    result.files = out.files();
    return result;
}

}  // namespace muskat
