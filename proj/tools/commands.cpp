#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "qmc/capacity.hpp"
#include "qmc/damping_basis.hpp"
#include "qmc/entanglement.hpp"
#include "qmc/error.hpp"
#include "qmc/geometry.hpp"
#include "qmc/kraus.hpp"
#include "qmc/lindblad.hpp"
#include "qmc/oracle.hpp"

namespace qmc::cli {

namespace {

using nlohmann::json;

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string csv_row(std::initializer_list<std::string> cells) {
    std::string line;
    for (const auto& c : cells) {
        if (!line.empty()) line += ',';
        line += c;
    }
    return line + '\n';
}

std::string dump(const json& j) { return j.dump(2) + '\n'; }

// 0, dt, 2 dt, ... up to t_max; t_max is appended when the step misses it.
std::vector<double> time_grid(double t_max, double dt) {
    if (!std::isfinite(t_max) || t_max < 0.0) throw DomainError("--t-max must be finite and non-negative");
    if (!std::isfinite(dt) || dt <= 0.0) throw DomainError("--dt must be positive");
    const auto n = static_cast<long long>(std::floor(t_max / dt + 1e-9));
    if (n > 10'000'000) throw DomainError("time grid too large");
    std::vector<double> grid;
    for (long long k = 0; k <= n; ++k) grid.push_back(static_cast<double>(k) * dt);
    if (grid.back() < t_max - 1e-12) grid.push_back(t_max);
    return grid;
}

QubitState initial_state(const RunOptions& o) {
    if (!o.rho.empty()) {
        CMat m(2);
        for (std::size_t k = 0; k < 4; ++k) m(k / 2, k % 2) = cplx(o.rho[2 * k], o.rho[2 * k + 1]);
        return QubitState(m);
    }
    return bloch_to_rho({o.bloch[0], o.bloch[1], o.bloch[2]});
}

json matrix_json(const CMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

json bloch_json(const BlochVector& b) { return {b.u, b.v, b.w}; }

json rates_json(const RateParams& r) {
    return {{"inv_T1", r.inv_T1}, {"inv_T2", r.inv_T2}, {"inv_T3", r.inv_T3}, {"w_eq", r.w_eq}, {"omega", r.omega}};
}

json minimal_entropy_json(const MinimalEntropyResult& m) {
    json states = json::array();
    for (const auto& s : m.states) {
        states.push_back({{"input", bloch_json(s.input)}, {"output", bloch_json(s.output)}, {"entropy", s.entropy}});
    }
    return {{"max_length", m.max_length}, {"degenerate", m.degenerate}, {"states", states}};
}

struct Check {
    std::string name;
    double value;
    double tolerance;
};

}  // namespace

std::string cmd_show(const RunOptions& o) {
    const RateParams& r = o.channel.rates;
    const LindbladSpec spec = build_spec(r);
    const BlochRates br = bloch_rates(r);
    const DampingBasis basis = damping_basis(r);

    json c = json::array();
    for (const auto& row : spec.c) c.push_back({row[0].real(), row[1].real(), row[2].real()});

    json j;
    j["channel"] = to_json(o.channel);
    j["rates"] = rates_json(r);
    j["w_eq"] = r.w_eq;
    j["unital"] = r.w_eq == 0.0;
    j["bloch_rates"] = {{"inv_Tu", br.inv_Tu}, {"inv_Tv", br.inv_Tv}, {"inv_Tw", br.inv_Tw}};
    j["c_matrix"] = c;
    j["c_eigenvalues"] = c_matrix_eigenvalues(spec);
    j["c_positive"] = c_matrix_positive(spec);
    j["t3_bound"] = t3_bound_check(r);
    j["damping_eigenvalues"] = basis.lambda;
    if (const auto res = o.channel.reservoir()) j["max_squeezing"] = max_squeezing(res->N);
    return dump(j);
}

std::string cmd_evolve(const RunOptions& o) {
    const RateParams& r = o.channel.rates;
    const std::vector<double> grid = time_grid(o.t_max, o.dt);
    const QubitState rho0 = initial_state(o);
    const BlochVector b0 = rho_to_bloch(rho0);

    std::vector<std::pair<double, BlochVector>> rows;
    if (o.method == "closed") {
        for (double t : grid) rows.emplace_back(t, apply_affine(affine_map(r, t), b0));
    } else if (o.method == "exp") {
        for (double t : grid) rows.emplace_back(t, rho_to_bloch(channel_apply_propagator(r, t, rho0)));
    } else if (o.method == "rk4") {
        QubitState rho = rho0;
        double now = 0.0;
        for (double t : grid) {
            rho = integrate_master(r, rho, {1e-3, t - now});
            now = t;
            rows.emplace_back(t, rho_to_bloch(rho));
        }
    } else {
        throw std::invalid_argument("unknown method '" + o.method + "'");
    }

    if (o.format == Format::Csv) {
        std::string out = "t,u,v,w\n";
        for (const auto& [t, b] : rows) out += csv_row({fmt12(t), fmt12(b.u), fmt12(b.v), fmt12(b.w)});
        return out;
    }
    json j;
    j["channel"] = to_json(o.channel);
    j["method"] = o.method;
    j["rows"] = json::array();
    for (const auto& [t, b] : rows) j["rows"].push_back({{"t", t}, {"u", b.u}, {"v", b.v}, {"w", b.w}});
    return dump(j);
}

std::string cmd_ellipsoid(const RunOptions& o) {
    const RateParams& r = o.channel.rates;
    for (double t : o.times) {
        if (!std::isfinite(t) || t < 0.0) throw DomainError("times must be finite and non-negative");
    }
    const auto rows = ellipsoid_surface_rows(r, o.times, o.points);

    if (o.format == Format::Csv) {
        std::string out = "t,u,v,w\n";
        for (const auto& row : rows) out += csv_row({fmt12(row[0]), fmt12(row[1]), fmt12(row[2]), fmt12(row[3])});
        return out;
    }
    json j;
    j["channel"] = to_json(o.channel);
    j["points"] = o.points;
    j["frames"] = json::array();
    for (std::size_t k = 0; k < o.times.size(); ++k) {
        const double t = o.times[k];
        json frame;
        frame["t"] = t;
        if (r.omega == 0.0) {
            const Ellipsoid e = image_ellipsoid(affine_map(r, t));
            frame["semi_axes"] = e.semi_axes;
            frame["center"] = e.center;
        }
        frame["minimal_entropy"] = minimal_entropy_json(minimal_entropy_states(r, t));
        json surface = json::array();
        for (std::size_t i = 0; i < o.points; ++i) {
            const auto& row = rows[k * o.points + i];
            surface.push_back({row[1], row[2], row[3]});
        }
        frame["surface"] = surface;
        j["frames"].push_back(frame);
    }
    return dump(j);
}

std::string cmd_kraus(const RunOptions& o) {
    const AffineMap m = affine_map(o.channel.rates, o.t);
    const KrausSet k = svc_kraus(m);
    const auto constants = svc_kraus_constants(m);
    const CpReport cp = cp_inequalities(m.Lambda);

    json j;
    j["channel"] = to_json(o.channel);
    j["t"] = o.t;
    j["Lambda"] = m.Lambda;
    j["shift"] = m.shift;
    j["count"] = k.ops.size();
    j["operators"] = json::array();
    for (const auto& a : k.ops) j["operators"].push_back(matrix_json(a));
    if (constants) {
        j["constants"] = {{"m10", constants->m10}, {"m13", constants->m13},
                          {"m21", constants->m21}, {"m22", {constants->m22.real(), constants->m22.imag()}},
                          {"m31", constants->m31}, {"m40", constants->m40}};
    } else {
        j["constants"] = nullptr;
    }
    j["completeness_residual"] = k.completeness_residual;
    j["appendix_residual"] = k.ops.size() <= 4 ? verify_appendix_equations(k, m).max_residual : 0.0;
    j["cp_inequalities"] = {{"pass", cp.pass}, {"slack", cp.slack}};
    j["t3_bound"] = t3_bound_check(o.channel.rates);
    return dump(j);
}

std::string cmd_capacity(const RunOptions& o) {
    const RateParams& r = o.channel.rates;
    const CapacityResult c = holevo_capacity(r, o.t, o.max_states);
    const CapacityDecomposition d = capacity_decomposition(r, o.t);

    json ensemble = json::array();
    for (const auto& m : c.ensemble.members()) ensemble.push_back({{"p", m.p}, {"bloch", bloch_json(m.b)}});

    json j;
    j["C"] = c.C;
    j["ensemble"] = ensemble;
    j["degenerate"] = c.degenerate;
    j["v_axis_pair"] = holevo_quantity(r, o.t, v_axis_pair());
    j["decomposition"] = {{"ideal", d.ideal}, {"shift_error", d.shift_error}, {"mixing_error", d.mixing_error},
                          {"capacity", d.capacity()}};
    j["params"] = {{"channel", to_json(o.channel)}, {"t", o.t}, {"max_states", o.max_states}};
    return dump(j);
}

std::string cmd_entangle(const RunOptions& o) {
    const auto reservoir = o.channel.reservoir();
    if (!reservoir) throw DomainError("entangle needs a reservoir channel (amplitude_damping, thermal or svc)");
    const auto family = squeezing_family(reservoir->A, reservoir->N);
    const std::vector<double> grid = time_grid(o.t_max, o.dt);
    const auto rows = e3_curve(family, grid);

    if (o.format == Format::Csv) {
        std::string out = "M_label,t,e3\n";
        for (const auto& row : rows) out += csv_row({row.label, fmt12(row.t), fmt12(row.e3)});
        return out;
    }
    json j;
    j["A"] = reservoir->A;
    j["N"] = reservoir->N;
    j["curves"] = json::array();
    for (std::size_t c = 0; c < family.size(); ++c) {
        json curve;
        curve["label"] = family[c].label;
        curve["M"] = family[c].rates.inv_T3 / reservoir->A;
        try {
            curve["critical_time"] = critical_time(family[c].rates);
        } catch (const DomainError&) {
            curve["critical_time"] = nullptr;
        }
        json ts = json::array(), es = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            ts.push_back(rows[c * grid.size() + i].t);
            es.push_back(rows[c * grid.size() + i].e3);
        }
        curve["t"] = ts;
        curve["e3"] = es;
        j["curves"].push_back(curve);
    }
    return dump(j);
}

json validation_report(const RunOptions& o) {
    const RateParams& r = o.channel.rates;
    const double t = o.t;
    std::vector<Check> checks;

    const DampingBasis b = damping_basis(r);
    double duality = 0.0, eigen = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            duality = std::max(duality, std::abs((b.L[i] * b.R[j]).trace() - cplx(i == j ? 1.0 : 0.0)));
        }
        eigen = std::max(eigen, (dissipator_apply(r, b.R[i]) - b.R[i] * cplx(b.lambda[i])).max_abs());
    }
    checks.push_back({"duality", duality, 1e-12});
    checks.push_back({"eigen_residual", eigen, 1e-12});
    checks.push_back({"c_matrix_min_eigenvalue", -c_matrix_eigenvalues(build_spec(r)).front(), 1e-12});

    std::vector<QubitState> samples;
    for (const auto& p : fibonacci_sphere(24)) samples.push_back(bloch_to_rho({0.9 * p.u, 0.9 * p.v, 0.9 * p.w}));

    double rk4 = 0.0;
    for (const auto& rho : samples) {
        rk4 = std::max(rk4, max_abs_diff(channel_apply_propagator(r, t, rho).matrix(),
                                         integrate_master(r, rho, {1e-3, t}).matrix()));
    }
    checks.push_back({"propagator_vs_rk4", rk4, 1e-6});

    if (r.omega == 0.0) {
        const AffineMap m = affine_map(r, t);
        const KrausSet k = svc_kraus(m);
        double expansion = 0.0, propagated = 0.0, kraus = 0.0;
        for (const auto& rho : samples) {
            const CMat closed = channel_apply(r, t, rho).matrix();
            expansion = std::max(expansion, max_abs_diff(closed, damping_expansion_apply(r, t, rho.matrix())));
            propagated = std::max(propagated, max_abs_diff(closed, channel_apply_propagator(r, t, rho).matrix()));
            kraus = std::max(kraus, max_abs_diff(closed, apply_kraus(k, rho.matrix())));
        }
        const CpReport cp = cp_inequalities(m.Lambda);
        checks.push_back({"closed_vs_expansion", expansion, 1e-12});
        checks.push_back({"closed_vs_propagator", propagated, 1e-10});
        checks.push_back({"kraus_vs_closed", kraus, 1e-10});
        checks.push_back({"kraus_completeness", k.completeness_residual, 1e-10});
        checks.push_back({"appendix_residual", verify_appendix_equations(k, m).max_residual, 1e-10});
        checks.push_back({"cp_inequalities_min_slack", -*std::min_element(cp.slack.begin(), cp.slack.end()), 1e-12});
    }

    json j;
    bool ok = true;
    j["channel"] = to_json(o.channel);
    j["t"] = t;
    j["checks"] = json::array();
    for (const auto& c : checks) {
        const bool pass = c.value <= c.tolerance;
        ok = ok && pass;
        j["checks"].push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", pass}});
    }
    j["ok"] = ok;
    return j;
}

std::string cmd_validate(const RunOptions& o) { return dump(validation_report(o)); }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Qubit channels of a two-level atom in a squeezed vacuum"};
    app.name("qmchan");
    app.require_subcommand(1, 1);

    struct Sub {
        CLI::App* app;
        RunOptions opts;
        std::string config;
        std::string format;
        std::string out_path;
    };
    std::map<std::string, Sub> subs;

    auto add = [&](const std::string& name, const std::string& help, const std::string& default_format,
                   std::vector<std::string> formats) -> Sub& {
        Sub& s = subs[name];
        s.app = app.add_subcommand(name, help);
        s.format = default_format;
        s.app->add_option("--config", s.config, "channel config JSON file (default: svc A=1 N=1 M=sqrt(2))");
        s.app->add_option("--format", s.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
        s.app->add_option("--out", s.out_path, "write output to this file instead of stdout");
        return s;
    };

    Sub& show = add("show", "rates, c-matrix and positivity of the channel", "json", {"json"});
    (void)show;

    Sub& evolve = add("evolve", "Bloch trajectory of one input state", "csv", {"json", "csv"});
    evolve.app->add_option("--t-max", evolve.opts.t_max, "final time")->capture_default_str();
    evolve.app->add_option("--dt", evolve.opts.dt, "output grid step")->capture_default_str();
    evolve.app->add_option("--method", evolve.opts.method, "closed, exp or rk4")
        ->check(CLI::IsMember({"closed", "exp", "rk4"}))
        ->capture_default_str();
    auto* bloch_opt = evolve.app->add_option("--bloch", evolve.opts.bloch, "initial Bloch vector u,v,w")
                          ->expected(3)
                          ->delimiter(',');
    evolve.app->add_option("--rho", evolve.opts.rho, "initial density matrix, 8 numbers: re,im pairs row-major")
        ->expected(8)
        ->delimiter(',')
        ->excludes(bloch_opt);

    Sub& ellipsoid = add("ellipsoid", "images of the pure-state sphere", "csv", {"json", "csv"});
    ellipsoid.app->add_option("--times", ellipsoid.opts.times, "comma-separated times")->delimiter(',');
    ellipsoid.app->add_option("--points", ellipsoid.opts.points, "sphere samples per time")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    Sub& kraus = add("kraus", "four-operator Kraus decomposition at time t", "json", {"json"});
    kraus.app->add_option("--t", kraus.opts.t, "time")->capture_default_str();

    Sub& capacity = add("capacity", "Holevo capacity at time t", "json", {"json"});
    capacity.app->add_option("--t", capacity.opts.t, "time")->capture_default_str();
    capacity.app->add_option("--max-states", capacity.opts.max_states, "ensemble size limit")
        ->check(CLI::Range(2, 4))
        ->capture_default_str();

    Sub& entangle = add("entangle", "partial-transpose eigenvalue e3 of a transmitted Bell pair", "csv",
                        {"json", "csv"});
    entangle.opts.t_max = 2.0;
    entangle.opts.dt = 0.01;
    entangle.app->add_option("--t-max", entangle.opts.t_max, "final time")->capture_default_str();
    entangle.app->add_option("--dt", entangle.opts.dt, "grid step")->capture_default_str();

    Sub& validate = add("validate", "cross-check the solvers on the configured channel", "json", {"json"});
    validate.app->add_option("--t", validate.opts.t, "time")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    for (auto& [name, s] : subs) {
        if (!s.app->parsed()) continue;
        try {
            if (!s.config.empty()) s.opts.channel = load_channel_config(s.config);
            s.opts.format = s.format == "csv" ? Format::Csv : Format::Json;

            std::string text;
            int status = 0;
            if (name == "show") text = cmd_show(s.opts);
            else if (name == "evolve") text = cmd_evolve(s.opts);
            else if (name == "ellipsoid") text = cmd_ellipsoid(s.opts);
            else if (name == "kraus") text = cmd_kraus(s.opts);
            else if (name == "capacity") text = cmd_capacity(s.opts);
            else if (name == "entangle") text = cmd_entangle(s.opts);
            else {
                const json report = validation_report(s.opts);
                text = dump(report);
                if (!report.at("ok").get<bool>()) status = 2;
            }

            if (s.out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(s.out_path);
                if (!f || !(f << text)) {
                    err << "error: cannot write '" << s.out_path << "'\n";
                    return 1;
                }
            }
            return status;
        } catch (const ConfigError& e) {
            err << "error: " << e.what() << '\n';
            return 1;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
    }
    return 1;
}

}  // namespace qmc::cli
