#include "wlrec/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>

#include "wlrec/asymptotics.hpp"
#include "wlrec/density.hpp"
#include "wlrec/hyp.hpp"
#include "wlrec/montecarlo.hpp"
#include "wlrec/serialize.hpp"
#include "wlrec/verify.hpp"

namespace wlrec {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string field_string(const Rational& v) { return scalar_json(v).get<std::string>(); }
std::string field_string(const BigFloat& v) { return v.to_string(30); }

mpfr_prec_t precision_from_env() {
    const char* env = std::getenv(kPrecisionEnv);
    if (env == nullptr || *env == '\0') return BigFloat::kDefaultPrecision;
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (*end != '\0' || bits < 64 || bits > 1 << 20) {
        throw UsageError(std::string(kPrecisionEnv) + " must be an integer in [64, 1048576], got '" + env + "'");
    }
    return static_cast<mpfr_prec_t>(bits);
}

// Flags shared by every computing subcommand.
struct Common {
    long n = 0;
    std::string alpha;
    std::string beta;
    long bits = 0;
    std::string format;

    EnsembleParams params() const {
        EnsembleParams p{n, parse_alpha(alpha), Beta::parse(beta)};
        p.validate();
        return p;
    }
    FieldChoice field(const EnsembleParams& p) const {
        const mpfr_prec_t requested = bits > 0 ? static_cast<mpfr_prec_t>(bits) : precision_from_env();
        return default_field(p, requested);
    }
    Json echo(const EnsembleParams& p) const {
        return Json{{"n", p.n}, {"alpha", p.alpha}, {"beta", beta}};
    }
    /// Grid-producing invocations default to CSV.
    std::string resolved_format(bool has_grid) const {
        if (!format.empty()) return format;
        return has_grid ? "csv" : "json";
    }
};

void add_common(CLI::App* sub, Common& c, const std::string& formats) {
    sub->add_option("n", c.n, "matrix dimension")->required();
    sub->add_option("alpha", c.alpha, "non-negative integer exponent")->required();
    sub->add_option("beta", c.beta, "Dyson index: p/q, decimal, pi, e, 5pi")->required();
    sub->add_option("--precision", c.bits, "float precision in bits (default $" + std::string(kPrecisionEnv) + " or 256)");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(CLI::detail::split(formats, '|')));
}

void emit(std::ostream& out, const std::string& command, const Json& params, const std::string& mode, Json payload) {
    const Json envelope{{"command", command},
                        {"params", params},
                        {"precision_mode", mode},
                        {"payload", std::move(payload)},
                        {"version", kVersion}};
    out << canonical_json(envelope) << '\n';
}

std::optional<std::vector<double>> grid_opt(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_grid(text);
}

struct DensityCmd {
    Common common;
    bool fixed_trace = false;
    std::string grid;

    void run(std::ostream& out) const {
        const EnsembleParams p = common.params();
        const FieldChoice choice = common.field(p);
        const auto points = grid_opt(grid);
        const std::string format = common.resolved_format(points.has_value());
        if (format == "csv" && !points) throw UsageError("--format csv needs --grid a:b:steps");
        with_field(choice, [&]<class F>() {
            const auto emit_rows = [&](const auto& d, const char* coeff_name, const std::vector<F>& coeffs) {
                if (format == "coeffs") {
                    out << "j," << coeff_name << '\n';
                    for (std::size_t i = 0; i < coeffs.size(); ++i) {
                        out << p.alpha + static_cast<long>(i) << ',' << field_string(coeffs[i]) << '\n';
                    }
                    return;
                }
                if (format == "csv") {
                    out << "x,density\n";
                    for (double x : *points) out << num(x) << ',' << num(d.eval(x)) << '\n';
                    return;
                }
                Json payload{{"density", density_json(d)}};
                if (points) {
                    Json rows = Json::array();
                    for (double x : *points) rows.push_back(Json::array({x, d.eval(x)}));
                    payload["grid"] = rows;
                }
                Json params = common.echo(p);
                params["fixed_trace"] = fixed_trace;
                emit(out, "density", params, choice.describe(), payload);
            };
            if (fixed_trace) {
                const auto d = FixedTraceDensity<F>::build(p);
                emit_rows(d, "phi", d.weights());
            } else {
                const auto d = ClosedFormDensity<F>::build(p);
                emit_rows(d, "kappa", d.kappa());
            }
        });
    }
};

bool is_integer_literal(const std::string& s) {
    const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    return start < s.size() && std::all_of(s.begin() + static_cast<long>(start), s.end(), ::isdigit);
}

struct MomentsCmd {
    Common common;
    std::vector<std::string> etas;
    bool fixed_trace = false;

    void run(std::ostream& out) const {
        const EnsembleParams p = common.params();
        const FieldChoice choice = common.field(p);
        const std::string format = common.resolved_format(false);
        Json rows = Json::array();
        with_field(choice, [&]<class F>() {
            std::optional<ClosedFormDensity<F>> base;
            std::optional<FixedTraceDensity<F>> ft;
            if (fixed_trace) ft = FixedTraceDensity<F>::build(p);
            else base = ClosedFormDensity<F>::build(p);
            for (const auto& text : etas) {
                Json row;
                if (is_integer_literal(text)) {
                    const long eta = std::stol(text);
                    const F v = fixed_trace ? moment_fixed_trace(*ft, eta) : moment_unrestricted(*base, eta);
                    row = Json{{"eta", eta}, {"value", scalar_json(v)}, {"approx", FieldTraits<F>::to_double(v)}};
                } else {
                    const BigFloat eta(parse_rational(text));
                    const BigFloat v = fixed_trace ? moment_fixed_trace_real(*ft, eta) : moment_unrestricted_real(*base, eta);
                    row = Json{{"eta", eta.to_double()}, {"value", v.to_double()}, {"approx", v.to_double()}};
                }
                rows.push_back(row);
            }
        });
        if (format == "csv") {
            out << "eta,value\n";
            for (const auto& row : rows) {
                const auto& v = row.at("value");
                out << canonical_json(row.at("eta")) << ',' << (v.is_string() ? v.get<std::string>() : num(v.get<double>()))
                    << '\n';
            }
            return;
        }
        Json params = common.echo(p);
        params["fixed_trace"] = fixed_trace;
        params["eta"] = etas;
        emit(out, "moments", params, choice.describe(), Json{{"moments", rows}});
    }
};

struct HypCmd {
    Common common;
    std::vector<std::string> xs;

    void run(std::ostream& out) const {
        const EnsembleParams p = common.params();
        const FieldChoice choice = common.field(p);
        const std::string format = common.resolved_format(false);
        Json payload;
        Json rows = Json::array();
        with_field(choice, [&]<class F>() {
            const auto h = hyp1f1_matrix<F>(p);
            Json coeffs = Json::array();
            for (const auto& c : h.poly.coeffs()) coeffs.push_back(scalar_json(c));
            payload["coefficients"] = coeffs;
            payload["prefactor"] = scalar_json(h.prefactor);
            for (const auto& text : xs) {
                const Rational x = parse_rational(text);
                if (sgn(x) < 0) throw DomainError("hyp1f1 argument must be >= 0 (the matrix argument is -x)");
                if constexpr (FieldTraits<F>::kExact) {
                    const Rational v = h(x);
                    rows.push_back(Json{{"x", x.get_d()}, {"value", v.get_d()}, {"exact", scalar_json(v)}});
                } else {
                    const BigFloat v = poly_eval(h.poly, BigFloat(x));
                    rows.push_back(Json{{"x", x.get_d()}, {"value", v.to_double()}});
                }
            }
        });
        if (format == "csv") {
            out << "x,value\n";
            for (const auto& row : rows) out << num(row.at("x")) << ',' << num(row.at("value")) << '\n';
            return;
        }
        payload["values"] = rows;
        Json params = common.echo(p);
        params["x"] = xs;
        emit(out, "hyp1f1", params, choice.describe(), payload);
    }
};

struct SimulateCmd {
    Common common;
    long count = 0;
    std::uint64_t seed = 0;
    bool fixed_trace = false;
    double tau_h = 0.0;
    bool ks = false;
    int hist = 0;
    int workers = 4;

    void run(std::ostream& out, std::ostream& err, bool delay) const {
        const EnsembleParams p = common.params();
        SampleConfig cfg;
        cfg.params = p;
        cfg.count = count;
        cfg.seed = seed;
        cfg.workers = workers;
        if (delay) {
            const EnsembleParams expected = delay_time_params(p.n, p.beta);
            if (expected.alpha != p.alpha) {
                throw UsageError("--delay-time needs alpha = beta n / 2 = " + std::to_string(expected.alpha) +
                                 ", got " + std::to_string(p.alpha));
            }
            cfg.mode = SampleMode::kDelayTime;
            cfg.tau_h = tau_h;
        } else if (fixed_trace) {
            cfg.mode = SampleMode::kFixedTrace;
        }
        const EmpiricalSample sample = draw_sample(cfg);
        const FieldChoice choice = common.field(p);
        std::optional<double> ks_value;
        if (ks) {
            ks_value = with_field(choice, [&]<class F>() {
                switch (cfg.mode) {
                    case SampleMode::kFixedTrace: {
                        const auto d = FixedTraceDensity<F>::build(p);
                        return ks_statistic(sample, [&](double x) { return d.cdf(x); });
                    }
                    case SampleMode::kDelayTime: {
                        const auto d = delay_time_density<F>(p.n, p.beta, cfg.tau_h);
                        return ks_statistic(sample, [&](double x) { return d.cdf(x); });
                    }
                    default: {
                        const auto d = ClosedFormDensity<F>::build(p);
                        return ks_statistic(sample, [&](double x) { return d.cdf(x); });
                    }
                }
            });
        }
        const std::string format = common.resolved_format(false);
        if (format == "csv") {
            if (hist > 0) write_histogram_csv(out, histogram(sample.values, hist));
            else write_sample_csv(out, sample);
            if (ks_value) err << "ks=" << num(*ks_value) << '\n';
            return;
        }
        Json payload{{"sample", sample_json(sample)}};
        if (ks_value) payload["ks"] = *ks_value;
        if (hist > 0) {
            Json bins = Json::array();
            for (const auto& b : histogram(sample.values, hist)) bins.push_back(Json::array({b.center, b.density}));
            payload["histogram"] = bins;
        }
        emit(out, "simulate", config_json(cfg), ks ? choice.describe() : "float(53)", payload);
    }
};

struct AsymptoticsCmd {
    Common common;
    bool fixed_trace = false;
    std::string tw_grid;
    std::string ld_grid;
    std::string tw_table;

    void run(std::ostream& out) const {
        const EnsembleParams p = common.params();
        const auto tw_points = grid_opt(tw_grid);
        const auto ld_points = grid_opt(ld_grid);
        std::optional<TracyWidomTable> table;
        if (!tw_table.empty()) table = TracyWidomTable::load(tw_table);
        const std::string format = common.resolved_format(tw_points || ld_points);
        if (format == "csv" && static_cast<int>(tw_points.has_value()) + static_cast<int>(ld_points.has_value()) != 1) {
            throw UsageError("--format csv needs exactly one of --tw-transform and --large-dev");
        }
        const LargeDeviationParams ld = LargeDeviationParams::from(p);
        Json payload;
        payload["large_deviation"] = Json{{"A", ld.A},
                                          {"zeta_minus", ld.zeta_minus},
                                          {"zeta_plus", ld.zeta_plus},
                                          {"delta_minus", ld.delta_minus}};
        if (ld_points) {
            if (format == "csv") out << "z,phi_minus,phi_plus\n";
            Json rows = Json::array();
            for (double z : *ld_points) {
                const std::optional<double> left =
                    z >= 0.0 && z < ld.zeta_minus ? std::optional(ld_left_rate(ld, z)) : std::nullopt;
                const double right = ld_right_rate(ld, z);
                if (format == "csv") out << num(z) << ',' << (left ? num(*left) : "") << ',' << num(right) << '\n';
                rows.push_back(Json::array({z, left ? Json(*left) : Json(nullptr), right}));
            }
            payload["large_deviation"]["rows"] = rows;
        }
        const FieldChoice choice = common.field(p);
        if (tw_points) {
            const auto curve = with_field(choice, [&]<class F>() {
                if (fixed_trace) return soft_edge_transform(FixedTraceDensity<F>::build(p), *tw_points);
                return soft_edge_transform(ClosedFormDensity<F>::build(p), *tw_points);
            });
            const SoftEdgeScaling scale = SoftEdgeScaling::from(p);
            if (format == "csv") out << (table ? "s,exact_scaled,tw_reference\n" : "s,exact_scaled\n");
            Json rows = Json::array();
            for (const auto& [s, v] : curve) {
                std::optional<double> ref;
                if (table && s >= table->min_s() && s <= table->max_s()) ref = (*table)(s);
                if (format == "csv") {
                    out << num(s) << ',' << num(v);
                    if (table) out << ',' << (ref ? num(*ref) : "");
                    out << '\n';
                }
                Json row = Json::array({s, v});
                if (table) row.push_back(ref ? Json(*ref) : Json(nullptr));
                rows.push_back(row);
            }
            payload["soft_edge"] = Json{{"m", scale.m}, {"nu", scale.nu}, {"sigma", scale.sigma}, {"rows", rows}};
        }
        if (format == "csv") return;
        Json params = common.echo(p);
        params["fixed_trace"] = fixed_trace;
        if (tw_points) params["tw_transform"] = tw_grid;
        if (ld_points) params["large_dev"] = ld_grid;
        if (table) params["tw_table"] = tw_table;
        emit(out, "asymptotics", params, tw_points ? choice.describe() : "float(53)", payload);
    }
};

int verify(std::ostream& out, const std::string& suite) {
    const auto checks = run_verify_suite(suite);
    Json rows = Json::array();
    bool all_pass = true;
    for (const auto& c : checks) {
        rows.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        all_pass = all_pass && c.pass;
    }
    emit(out, "verify", Json{{"suite", suite}}, "mixed", Json{{"checks", rows}, {"passed", all_pass}});
    return all_pass ? kExitOk : kExitConsistency;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
    const auto parts = CLI::detail::split(text, ':');
    if (parts.size() != 3) throw UsageError("grid must look like a:b:steps, got '" + text + "'");
    double a = 0.0;
    double b = 0.0;
    long steps = 0;
    try {
        std::size_t used = 0;
        a = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
        b = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        steps = std::stol(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    } catch (const std::logic_error&) {
        throw UsageError("cannot parse grid '" + text + "'");
    }
    if (steps < 1) throw UsageError("grid needs at least one step");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) return {a};
    for (long i = 0; i < steps; ++i) {
        out.push_back(i == steps - 1 ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact smallest-eigenvalue densities of beta-Wishart-Laguerre ensembles", "wlrec"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    DensityCmd density;
    auto* density_cmd = app.add_subcommand("density", "closed-form density, coefficients or grid values");
    add_common(density_cmd, density.common, "json|csv|coeffs");
    density_cmd->add_flag("--fixed-trace", density.fixed_trace, "unit-trace ensemble");
    density_cmd->add_option("--grid", density.grid, "a:b:steps, both ends included");

    MomentsCmd moments;
    auto* moments_cmd = app.add_subcommand("moments", "moments <x^eta>");
    add_common(moments_cmd, moments.common, "json|csv");
    moments_cmd->add_option("eta", moments.etas, "moment orders")->required();
    moments_cmd->add_flag("--fixed-trace", moments.fixed_trace, "unit-trace ensemble");

    HypCmd hyp;
    auto* hyp_cmd = app.add_subcommand("hyp1f1", "1F1(-n+1; 2 alpha/beta + 2; -x 1_alpha)");
    add_common(hyp_cmd, hyp.common, "json|csv");
    hyp_cmd->add_option("x", hyp.xs, "arguments (rational or decimal)");

    SimulateCmd sim;
    auto* sim_cmd = app.add_subcommand("simulate", "bidiagonal-model sampling");
    add_common(sim_cmd, sim.common, "json|csv");
    sim_cmd->add_option("count", sim.count, "number of draws")->required();
    sim_cmd->add_option("seed", sim.seed, "64-bit seed")->required();
    auto* ft_flag = sim_cmd->add_flag("--fixed-trace", sim.fixed_trace, "smallest eigenvalue over the trace");
    auto* delay_opt = sim_cmd->add_option("--delay-time", sim.tau_h, "largest delay time with this tau_H");
    ft_flag->excludes(delay_opt);
    sim_cmd->add_flag("--ks", sim.ks, "KS distance to the closed-form CDF");
    sim_cmd->add_option("--hist", sim.hist, "histogram bin count (typically 60)")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--workers", sim.workers, "worker threads; output depends on (seed, workers)")
        ->check(CLI::Range(1, 256));

    AsymptoticsCmd asym;
    auto* asym_cmd = app.add_subcommand("asymptotics", "soft-edge scaling and large-deviation rate functions");
    add_common(asym_cmd, asym.common, "json|csv");
    asym_cmd->add_flag("--fixed-trace", asym.fixed_trace, "scale the unit-trace density");
    auto* tw_opt = asym_cmd->add_option("--tw-transform", asym.tw_grid, "s grid a:b:steps");
    asym_cmd->add_option("--large-dev", asym.ld_grid, "z grid a:b:steps");
    asym_cmd->add_option("--tw-table", asym.tw_table, "two-column CSV s,density")->needs(tw_opt);

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "self-checks against published values and oracles");
    verify_cmd->add_option("--suite", suite, "small|appendixB|tables|all")
        ->check(CLI::IsMember({"small", "appendixB", "tables", "all"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (density_cmd->parsed()) density.run(out);
        else if (moments_cmd->parsed()) moments.run(out);
        else if (hyp_cmd->parsed()) hyp.run(out);
        else if (sim_cmd->parsed()) sim.run(out, err, delay_opt->count() > 0);
        else if (asym_cmd->parsed()) asym.run(out);
        else if (verify_cmd->parsed()) return verify(out, suite);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const UnsupportedParameter& e) {
        err << "unsupported: " << e.what() << '\n';
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return kExitConsistency;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitConsistency;
    }
    return kExitUsage;
}

}  // namespace wlrec
