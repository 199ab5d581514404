#include "cascade/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "cascade/errors.hpp"
#include "cascade/format.hpp"
#include "cascade/single_mode.hpp"
#include "cascade/superposed.hpp"

namespace cascade {

namespace {

constexpr std::array<std::pair<Quantity, std::string_view>, 12> kNames{{
    {Quantity::n_bar, "n_bar"},
    {Quantity::var_plus, "var_plus"},
    {Quantity::var_minus, "var_minus"},
    {Quantity::vacuum, "vacuum"},
    {Quantity::f_a, "f_a"},
    {Quantity::f_b, "f_b"},
    {Quantity::f_c, "f_c"},
    {Quantity::f_d, "f_d"},
    {Quantity::s_plus, "s_plus"},
    {Quantity::s_minus, "s_minus"},
    {Quantity::s_sup, "s_sup"},
    {Quantity::n_s, "n_s"},
}};

std::string valid_selectors() {
    std::string out;
    for (const auto& [q, name] : kNames) {
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

}  // namespace

std::string_view quantity_name(Quantity q) {
    for (const auto& [candidate, name] : kNames) {
        if (candidate == q) return name;
    }
    return "unknown";
}

Quantity parse_quantity(std::string_view text) {
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), '-', '_');
    for (const auto& [q, name] : kNames) {
        if (name == normalized) return q;
    }
    throw ConfigError("unknown quantity '" + std::string(text) + "'; valid selectors: " + valid_selectors());
}

std::vector<Quantity> all_quantities() {
    std::vector<Quantity> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
}

double evaluate(Quantity q, const SystemParams& params) {
    switch (q) {
        case Quantity::n_bar: return mean_photon_number(params).n_bar;
        case Quantity::var_plus: return quadrature_report(params).var_plus;
        case Quantity::var_minus: return quadrature_report(params).var_minus;
        case Quantity::vacuum: return quadrature_report(params).vacuum_level;
        case Quantity::f_a: return quadrature_report(params).f_lower;
        case Quantity::f_b: return quadrature_report(params).f_product;
        case Quantity::f_c: return superposed_uncertainty(params).f_lower;
        case Quantity::f_d: return superposed_uncertainty(params).f_product;
        case Quantity::s_plus: return quadrature_report(params).s_plus;
        case Quantity::s_minus: return quadrature_report(params).s_minus;
        case Quantity::s_sup: return superposed_report(params).s_sup_plus;
        case Quantity::n_s: return superposed_report(params).n_s;
    }
    throw InternalError("unhandled quantity");
}

std::size_t SweepTable::column_index(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw ConfigError("no column named '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> SweepTable::column(std::string_view name) const {
    const std::size_t idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[idx]);
    return out;
}

SweepTable sweep(const SweepSpec& spec) {
    if (!(spec.eps_min >= 0.0)) throw InvalidParameter("eps_min", "must be >= 0");
    if (!(spec.eps_max > spec.eps_min)) throw InvalidParameter("eps_max", "must exceed eps_min");
    if (spec.points < 2) throw InvalidParameter("points", "must be >= 2");
    if (spec.quantities.empty()) throw ConfigError("sweep needs at least one quantity");

    const std::vector<double> gammas = spec.gammas.empty() ? std::vector<double>{spec.base.gamma} : spec.gammas;
    const bool tag_gamma = gammas.size() > 1;

    // Validate the base rates once, up front.
    for (double gamma : gammas) params_from_plot_set(spec.base.gamma_c, spec.base.kappa, gamma, spec.eps_min);

    SweepTable table;
    table.columns.emplace_back("epsilon");
    for (Quantity q : spec.quantities) {
        for (double gamma : gammas) {
            std::string name(quantity_name(q));
            if (tag_gamma) name += "_gamma" + format_full(gamma);
            table.columns.push_back(std::move(name));
        }
    }

    const double width = spec.eps_max - spec.eps_min;
    const double last = static_cast<double>(spec.points - 1);
    table.rows.reserve(spec.points);
    for (std::size_t i = 0; i < spec.points; ++i) {
        const double eps = (i + 1 == spec.points) ? spec.eps_max
                                                   : spec.eps_min + width * (static_cast<double>(i) / last);
        std::vector<double> row;
        row.reserve(table.columns.size());
        row.push_back(eps);
        for (Quantity q : spec.quantities) {
            for (double gamma : gammas) {
                row.push_back(evaluate(q, params_from_plot_set(spec.base.gamma_c, spec.base.kappa, gamma, eps)));
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_csv(std::ostream& out, const SweepTable& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_full(row[i]);
        }
        out << '\n';
    }
}

BoundaryMaximum::BoundaryMaximum(bool at_upper, double eps, double value, std::size_t evaluations)
    : std::runtime_error("maximum attained at the " + std::string(at_upper ? "upper" : "lower") +
                         " bracket end eps=" + format_full(eps) + " (value " + format_full(value) +
                         "); no interior maximum"),
      at_upper_(at_upper),
      eps_(eps),
      value_(value),
      evaluations_(evaluations) {}

OptimumResult maximize(const BaseRates& base, Quantity q, std::pair<double, double> bracket, double tol) {
    auto [lo, hi] = bracket;
    if (!(tol > 0.0)) throw InvalidParameter("tol", "must be > 0");
    if (!(lo >= 0.0)) throw InvalidParameter("bracket", "lower end must be >= 0");
    if (!(hi > lo)) throw InvalidParameter("bracket", "upper end must exceed lower end");

    std::size_t evaluations = 0;
    auto f = [&](double eps) {
        ++evaluations;
        return evaluate(q, params_from_plot_set(base.gamma_c, base.kappa, base.gamma, eps));
    };

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }

    const double fa = f(a);
    const double fb = f(b);
    if (b == hi && fb >= std::max({fa, fc, fd})) throw BoundaryMaximum(true, hi, fb, evaluations);
    if (a == lo && fa >= std::max({fb, fc, fd})) throw BoundaryMaximum(false, lo, fa, evaluations);

    OptimumResult r;
    r.eps_star = a;
    r.value_star = fa;
    for (auto [eps, value] : {std::pair{c, fc}, std::pair{d, fd}, std::pair{b, fb}}) {
        if (value > r.value_star) {
            r.eps_star = eps;
            r.value_star = value;
        }
    }
    r.bracket = b - a;
    r.evaluations = evaluations;
    return r;
}

}  // namespace cascade
