#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cascade/errors.hpp"
#include "cascade/fock_oracle.hpp"
#include "cascade/format.hpp"
#include "cascade/model.hpp"
#include "cascade/single_mode.hpp"
#include "cascade/superposed.hpp"
#include "cascade/sweep.hpp"

namespace cascade::cli {
namespace {

using json = nlohmann::ordered_json;

enum class Format { report, json, csv };

struct Field {
    std::string key;
    double value;
    bool count = false;
};

std::string render(const Field& f) {
    return f.count ? std::to_string(static_cast<long long>(f.value)) : format_full(f.value);
}

struct Section {
    std::string name;
    std::vector<Field> fields;
};

// Raw flag values; which ones are set decides the parameterization style.
struct ParamFlags {
    std::optional<double> g;
    std::optional<double> eta;
    std::optional<double> gamma_c;
    std::optional<double> epsilon;
    std::optional<double> kappa;
    std::string gamma;  // comma-separated for figure and sweep
};

struct OutputFlags {
    std::string out;
    std::string format;
};

const BaseRates plot_rates{};
constexpr double plot_epsilon = 0.6;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        parts.push_back(first == std::string::npos ? std::string() : item.substr(first, last - first + 1));
    }
    return parts;
}

double parse_number(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError(what + ": not a number: '" + text + "'");
    }
    if (used != text.size()) throw ConfigError(what + ": not a number: '" + text + "'");
    return v;
}

std::vector<double> parse_gammas(const std::string& text, std::vector<double> fallback) {
    if (text.empty()) return fallback;
    std::vector<double> values;
    for (const auto& part : split(text, ',')) values.push_back(parse_number(part, "--gamma"));
    return values;
}

double single_gamma(const ParamFlags& f) {
    const auto values = parse_gammas(f.gamma, {plot_rates.gamma});
    if (values.size() != 1) throw ConfigError("--gamma: expected a single value for this subcommand");
    return values.front();
}

bool coupling_style(const ParamFlags& f) { return f.g || f.eta; }

void reject_mixed_styles(const ParamFlags& f) {
    if (coupling_style(f) && (f.gamma_c || f.epsilon)) {
        throw ConfigError("parameters: use either --g/--eta or --gamma-c/--epsilon, not both");
    }
}

SystemParams resolve_params(const ParamFlags& f) {
    reject_mixed_styles(f);
    const double kappa = f.kappa.value_or(plot_rates.kappa);
    const double gamma = single_gamma(f);
    if (coupling_style(f)) {
        if (!f.g || !f.eta) throw ConfigError("parameters: --g and --eta must be given together");
        return derive_params(*f.g, kappa, *f.eta, gamma);
    }
    return params_from_plot_set(f.gamma_c.value_or(plot_rates.gamma_c), kappa, gamma,
                                f.epsilon.value_or(plot_epsilon));
}

// Rates for sweeps and optimization, where epsilon is the free variable.
BaseRates resolve_base(const ParamFlags& f, double gamma) {
    reject_mixed_styles(f);
    if (f.eta || f.epsilon) throw ConfigError("parameters: epsilon is the swept variable; drop --eta/--epsilon");
    BaseRates base;
    base.kappa = f.kappa.value_or(plot_rates.kappa);
    base.gamma = gamma;
    if (f.g) {
        if (!(*f.g > 0.0) || !(base.kappa > 0.0)) throw InvalidParameter("g", "must be positive");
        base.gamma_c = 4.0 * *f.g * *f.g / base.kappa;
    } else {
        base.gamma_c = f.gamma_c.value_or(plot_rates.gamma_c);
    }
    return base;
}

Format parse_format(const std::string& text, Format fallback) {
    if (text.empty()) return fallback;
    if (text == "report") return Format::report;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw ConfigError("--format: expected report, json or csv, got '" + text + "'");
}

void add_param_flags(CLI::App& app, ParamFlags& f, bool gamma_list) {
    app.add_option("--g", f.g, "Atom-cavity coupling g (with --eta)");
    app.add_option("--eta", f.eta, "Drive amplitude eta (with --g)");
    app.add_option("--gamma-c", f.gamma_c, "Stimulated-emission rate gamma_c = 4 g^2 / kappa [0.5]");
    app.add_option("--epsilon", f.epsilon, "Scaled drive epsilon = 2 g eta / kappa [0.6]");
    app.add_option("--kappa", f.kappa, "Cavity damping rate kappa [0.8]");
    app.add_option("--gamma", f.gamma,
                   gamma_list ? "Spontaneous-emission rate(s), comma-separated" : "Spontaneous-emission rate [0.3]");
}

void add_output_flags(CLI::App& app, OutputFlags& o, const std::string& formats) {
    app.add_option("--out", o.out, "Write data to this file instead of standard output");
    app.add_option("--format", o.format, "Output format: " + formats);
}

// Sink that writes to --out when given, else to the default stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw ConfigError("--out: cannot open '" + path + "' for writing");
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }
    void finish() {
        stream_->flush();
        if (!*stream_) throw ConfigError("--out: write failed");
    }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void write_sections(std::ostream& out, const std::vector<Section>& sections, Format format) {
    switch (format) {
    case Format::report:
        for (const auto& s : sections) {
            out << s.name << ":\n";
            for (const auto& f : s.fields) {
                out << "  " << f.key << ": " << render(f);
                if (!f.count) out << "  # " << format_rounded(f.value);
                out << '\n';
            }
        }
        break;
    case Format::json: {
        json doc = json::object();
        for (const auto& s : sections) {
            json block = json::object();
            for (const auto& f : s.fields) {
                if (f.count) {
                    block[f.key] = static_cast<long long>(f.value);
                } else {
                    block[f.key] = f.value;
                }
            }
            doc[s.name] = block;
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "section,key,value\n";
        for (const auto& s : sections) {
            for (const auto& f : s.fields) out << s.name << ',' << f.key << ',' << render(f) << '\n';
        }
        break;
    }
}

void write_table(std::ostream& out, const SweepTable& table, Format format) {
    switch (format) {
    case Format::csv:
        write_csv(out, table);
        break;
    case Format::json: {
        json doc = json::object();
        doc["columns"] = table.columns;
        doc["rows"] = table.rows;
        out << doc.dump() << '\n';
        break;
    }
    case Format::report:
        throw ConfigError("--format: tables are written as csv or json");
    }
}

std::vector<Section> report_sections(const SystemParams& p) {
    const auto atomic = atomic_steady_state(p);
    const auto photon = mean_photon_number(p);
    const auto moments = field_moments(p);
    const auto quad = quadrature_report(p);
    const auto sup = superposed_report(p);
    return {
        {"parameters",
         {{"g", p.g}, {"kappa", p.kappa}, {"eta", p.eta}, {"gamma", p.gamma}, {"gamma_c", p.gamma_c},
          {"epsilon", p.epsilon}}},
        {"atomic",
         {{"sigma_a", atomic.sigma_a}, {"sigma_b", atomic.sigma_b}, {"sigma_c", atomic.sigma_c},
          {"eta_a", atomic.eta_a}, {"eta_b", atomic.eta_b}, {"eta_c", atomic.eta_c}}},
        {"photon",
         {{"n_bar", photon.n_bar}, {"drive_term", photon.drive_term}, {"absorbed_term", photon.absorbed_term},
          {"emitted_term", photon.emitted_term}, {"mean_b", moments.mean_b},
          {"mean_b_squared", moments.mean_b_squared}}},
        {"quadrature",
         {{"var_plus", quad.var_plus}, {"var_minus", quad.var_minus}, {"vacuum_level", quad.vacuum_level},
          {"f_a", quad.f_lower}, {"f_b", quad.f_product}, {"s_plus", quad.s_plus}, {"s_minus", quad.s_minus}}},
        {"superposed",
         {{"n_s", sup.n_s}, {"var_plus", sup.var_plus}, {"var_minus", sup.var_minus},
          {"vacuum_level", sup.vacuum_level}, {"f_c", sup.f_lower}, {"f_d", sup.f_product},
          {"s_sup_plus", sup.s_sup_plus}, {"s_sup_minus", sup.s_sup_minus}}},
    };
}

struct FigureDef {
    std::string id;
    std::string caption;
    std::vector<Quantity> quantities;
    std::vector<double> gammas;
    double eps_max;
};

const std::vector<FigureDef>& figures() {
    static const std::vector<FigureDef> defs = {
        {"fig2", "mean photon number, gamma = 0 and 0.3", {Quantity::n_bar}, {0.0, 0.3}, 2.0},
        {"fig3", "quadrature variances and vacuum level, gamma = 0.3",
         {Quantity::var_minus, Quantity::var_plus, Quantity::vacuum}, {0.3}, 2.0},
        {"fig4", "uncertainty bounds f_a and f_b, gamma = 0.3", {Quantity::f_a, Quantity::f_b}, {0.3}, 2.0},
        {"fig5", "plus-quadrature squeezing, gamma = 0 and 0.3", {Quantity::s_plus}, {0.0, 0.3}, 2.0},
        {"fig6", "minus-quadrature squeezing on [0, 20], gamma = 0 and 0.3", {Quantity::s_minus}, {0.0, 0.3},
         20.0},
        {"fig7", "superposed-mode bounds f_c and f_d, gamma = 0.3", {Quantity::f_c, Quantity::f_d}, {0.3}, 2.0},
    };
    return defs;
}

const FigureDef& find_figure(const std::string& id) {
    for (const auto& f : figures()) {
        if (f.id == id) return f;
    }
    std::string valid;
    for (const auto& f : figures()) valid += (valid.empty() ? "" : ", ") + f.id;
    throw ConfigError("unknown figure '" + id + "'; valid ids: " + valid);
}

std::string figure_help() {
    std::string text = "Figure id. Defaults: gamma_c = 0.5, kappa = 0.8, 401 points.";
    for (const auto& f : figures()) {
        text += "\n  " + f.id + ": " + f.caption + (f.eps_max == 2.0 ? ", eps in [0, 2]" : "");
    }
    return text;
}

// Appends key=value pairs from a flat config file as flags, unless the same
// flag was already given (flags win).
std::vector<std::string> merge_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw ConfigError("--config: cannot read '" + path + "'");
    auto present = [&](const std::string& flag) {
        return std::any_of(args.begin(), args.end(),
                           [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
    };
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("--config: line " + std::to_string(lineno) + ": expected key = value");
        }
        auto key = split(line.substr(0, eq), '\n').front();
        auto value = line.substr(eq + 1);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t\r") + 1);
        value.erase(0, value.find_first_not_of(" \t"));
        value.erase(value.find_last_not_of(" \t\r") + 1);
        std::replace(key.begin(), key.end(), '_', '-');
        if (key.empty()) throw ConfigError("--config: line " + std::to_string(lineno) + ": empty key");
        const std::string flag = "--" + key;
        if (!present(flag)) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

FockConfig parse_dims(const std::string& text, FockConfig config) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw ConfigError("--dims: expected Nb,N1,N2");
    std::size_t dims[3];
    for (std::size_t i = 0; i < 3; ++i) {
        const double v = parse_number(parts[i], "--dims");
        if (v < 2 || v != std::floor(v)) throw ConfigError("--dims: each dimension must be an integer >= 2");
        dims[i] = static_cast<std::size_t>(v);
    }
    config.dim_b = dims[0];
    config.dim_a1 = dims[1];
    config.dim_a2 = dims[2];
    return config;
}

json comparison_json(const ComparisonReport& r) {
    json doc = json::object();
    doc["verdict"] = std::string(verdict_name(r.verdict));
    doc["params"] = {{"g", r.params.g},         {"kappa", r.params.kappa},     {"eta", r.params.eta},
                     {"gamma", r.params.gamma}, {"gamma_c", r.params.gamma_c}, {"epsilon", r.params.epsilon},
                     {"kappa_over_g", r.kappa_over_g()}};
    doc["config"] = {{"dims", {r.config.dim_b, r.config.dim_a1, r.config.dim_a2}},
                     {"dt", r.dt},
                     {"t_end", r.t_end},
                     {"residual_tolerance", r.config.residual_tolerance},
                     {"leak_tolerance", r.config.leak_tolerance}};
    doc["run"] = {{"time", r.time},
                  {"steps", r.steps},
                  {"residual", r.residual},
                  {"trace_error", r.trace_error},
                  {"top_level_population", r.top_level_population}};
    json fields = json::object();
    for (const auto& f : r.fields) {
        fields[f.name] = {{"oracle", f.oracle},   {"analytic", f.analytic},   {"abs_dev", f.abs_dev},
                          {"rel_dev", f.rel_dev}, {"tolerance", f.tolerance}, {"pass", f.pass}};
    }
    doc["fields"] = fields;
    return doc;
}

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Driven three-level cascade atom in an open cavity: closed forms, sweeps and a master-equation "
                 "oracle"};
    app.name("cascade");
    app.require_subcommand(1, 1);
    app.add_option("--config", "Flat key = value file; flags on the command line win");

    // report
    ParamFlags report_params;
    OutputFlags report_out;
    auto* report = app.add_subcommand("report", "Steady state, photon number, quadrature and superposed-mode report");
    add_param_flags(*report, report_params, false);
    add_output_flags(*report, report_out, "report (default), json, csv");

    // figure
    std::string figure_id;
    ParamFlags figure_params;
    OutputFlags figure_out;
    std::optional<double> figure_eps_min;
    std::optional<double> figure_eps_max;
    std::size_t figure_points = 401;
    auto* figure = app.add_subcommand("figure", "Curve data for a named figure (fig2 to fig7)");
    figure->add_option("id", figure_id, figure_help())->required();
    add_param_flags(*figure, figure_params, true);
    figure->add_option("--eps-min", figure_eps_min, "Lower end of the epsilon grid [0]");
    figure->add_option("--eps-max", figure_eps_max, "Upper end of the epsilon grid [2, or 20 for fig6]");
    figure->add_option("--points", figure_points, "Grid points including both ends [401]");
    add_output_flags(*figure, figure_out, "csv (default), json");

    // sweep
    ParamFlags sweep_params;
    OutputFlags sweep_out;
    double sweep_eps_min = 0.0;
    double sweep_eps_max = 2.0;
    std::size_t sweep_points = 401;
    std::string sweep_quantities;
    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate closed-form quantities on a uniform epsilon grid");
    add_param_flags(*sweep_cmd, sweep_params, true);
    sweep_cmd->add_option("--eps-min", sweep_eps_min, "Lower end of the epsilon grid [0]");
    sweep_cmd->add_option("--eps-max", sweep_eps_max, "Upper end of the epsilon grid [2]");
    sweep_cmd->add_option("--points", sweep_points, "Grid points including both ends [401]");
    sweep_cmd->add_option("--quantities", sweep_quantities, "Comma-separated selectors [all]");
    add_output_flags(*sweep_cmd, sweep_out, "csv (default), json");

    // maximize
    ParamFlags max_params;
    OutputFlags max_out;
    std::string max_quantity = "s_plus";
    std::optional<double> max_lo;
    std::optional<double> max_hi;
    double max_tol = 1e-8;
    auto* maximize_cmd = app.add_subcommand("maximize", "Golden-section maximization of a quantity over epsilon");
    add_param_flags(*maximize_cmd, max_params, false);
    maximize_cmd->add_option("--quantity", max_quantity, "Quantity selector [s_plus]");
    maximize_cmd->add_option("--eps-min", max_lo, "Bracket lower end [0]");
    maximize_cmd->add_option("--eps-max", max_hi, "Bracket upper end [3, or 100 for s_minus]");
    maximize_cmd->add_option("--tol", max_tol, "Bracket width at which the search stops [1e-8]");
    add_output_flags(*maximize_cmd, max_out, "report (default), json, csv");

    // oracle
    ParamFlags oracle_params;
    OutputFlags oracle_out;
    std::string oracle_dims;
    std::optional<double> oracle_t_end;
    std::optional<double> oracle_dt;
    FockConfig fock;
    ComparisonTolerances tolerances;
    auto* oracle = app.add_subcommand("oracle", "Compare the closed forms with a truncated-Fock master-equation run");
    add_param_flags(*oracle, oracle_params, false);
    oracle->add_option("--dims", oracle_dims, "Fock dimensions Nb,N1,N2 [6,3,3]");
    oracle->add_option("--t-end", oracle_t_end, "Evolution horizon [200 / slowest rate]");
    oracle->add_option("--dt", oracle_dt, "RK4 step [0.02 / fastest rate]");
    oracle->add_option("--leak-tol", fock.leak_tolerance, "Largest allowed top Fock level population [1e-4]");
    oracle->add_option("--pop-tol", tolerances.populations, "Relative tolerance for populations [0.02]");
    oracle->add_option("--field-tol", tolerances.field_moments, "Relative tolerance for field moments [0.05]");
    add_output_flags(*oracle, oracle_out, "report (default), json, csv");

    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }

    if (report->parsed()) {
        const auto params = resolve_params(report_params);
        const auto format = parse_format(report_out.format, Format::report);
        Sink sink(report_out.out, out);
        write_sections(*sink, report_sections(params), format);
        sink.finish();
        return exit_ok;
    }

    if (figure->parsed()) {
        const auto& def = find_figure(figure_id);
        if (figure_params.eta || figure_params.epsilon) {
            throw ConfigError("figure: epsilon is the swept variable; drop --eta/--epsilon");
        }
        SweepSpec spec;
        spec.gammas = parse_gammas(figure_params.gamma, def.gammas);
        spec.base = resolve_base(figure_params, spec.gammas.front());
        spec.eps_min = figure_eps_min.value_or(0.0);
        spec.eps_max = figure_eps_max.value_or(def.eps_max);
        spec.points = figure_points;
        spec.quantities = def.quantities;
        const auto format = parse_format(figure_out.format, Format::csv);
        const auto table = sweep(spec);
        Sink sink(figure_out.out, out);
        write_table(*sink, table, format);
        sink.finish();
        return exit_ok;
    }

    if (sweep_cmd->parsed()) {
        SweepSpec spec;
        spec.gammas = parse_gammas(sweep_params.gamma, {plot_rates.gamma});
        spec.base = resolve_base(sweep_params, spec.gammas.front());
        spec.eps_min = sweep_eps_min;
        spec.eps_max = sweep_eps_max;
        spec.points = sweep_points;
        if (sweep_quantities.empty()) {
            spec.quantities = all_quantities();
        } else {
            for (const auto& q : split(sweep_quantities, ',')) spec.quantities.push_back(parse_quantity(q));
        }
        const auto format = parse_format(sweep_out.format, Format::csv);
        const auto table = sweep(spec);
        Sink sink(sweep_out.out, out);
        write_table(*sink, table, format);
        sink.finish();
        return exit_ok;
    }

    if (maximize_cmd->parsed()) {
        const auto q = parse_quantity(max_quantity);
        const auto base = resolve_base(max_params, single_gamma(max_params));
        const std::pair<double, double> bracket{max_lo.value_or(0.0),
                                                max_hi.value_or(q == Quantity::s_minus ? 100.0 : 3.0)};
        const auto format = parse_format(max_out.format, Format::report);
        const std::string name(quantity_name(q));
        std::vector<Section> sections;
        std::string notice;
        try {
            const auto r = maximize(base, q, bracket, max_tol);
            sections.push_back({"maximum",
                                {{"eps_star", r.eps_star},
                                 {"value_star", r.value_star},
                                 {"bracket", r.bracket},
                                 {"evaluations", static_cast<double>(r.evaluations), true}}});
        } catch (const BoundaryMaximum& b) {
            sections.push_back({"boundary_maximum",
                                {{"eps", b.eps()},
                                 {"value", b.value()},
                                 {"at_upper", b.at_upper() ? 1.0 : 0.0, true},
                                 {"evaluations", static_cast<double>(b.evaluations()), true}}});
            notice = name + " has no interior maximum on [" + format_full(bracket.first) + ", " +
                     format_full(bracket.second) + "]; it is largest at the " + (b.at_upper() ? "upper" : "lower") +
                     " end of the bracket";
        }
        sections.insert(sections.begin(), Section{"rates",
                                                  {{"gamma_c", base.gamma_c},
                                                   {"kappa", base.kappa},
                                                   {"gamma", base.gamma},
                                                   {"eps_min", bracket.first},
                                                   {"eps_max", bracket.second}}});
        Sink sink(max_out.out, out);
        if (format == Format::report) *sink << "quantity: " << name << '\n';
        write_sections(*sink, sections, format);
        if (!notice.empty() && format == Format::report) *sink << "notice: " << notice << '\n';
        sink.finish();
        if (!notice.empty() && (format != Format::report || !max_out.out.empty())) {
            err << "notice: " << notice << '\n';
        }
        return exit_ok;
    }

    if (oracle->parsed()) {
        const auto params = resolve_params(oracle_params);
        if (!oracle_dims.empty()) fock = parse_dims(oracle_dims, fock);
        fock.t_end = oracle_t_end;
        fock.dt = oracle_dt;
        const auto format = parse_format(oracle_out.format, Format::report);
        const auto r = compare_with_analytic(params, fock, tolerances);
        Sink sink(oracle_out.out, out);
        switch (format) {
        case Format::report:
            write_comparison_text(*sink, r);
            break;
        case Format::json:
            *sink << comparison_json(r).dump(2) << '\n';
            break;
        case Format::csv:
            write_comparison_csv(*sink, r);
            break;
        }
        sink.finish();
        return r.verdict == Verdict::pass ? exit_ok : exit_outside_regime;
    }
    return exit_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << " (residual " << format_full(e.residual()) << ")\n";
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_error;
}

}  // namespace cascade::cli
