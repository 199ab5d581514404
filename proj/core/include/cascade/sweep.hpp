#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cascade/model.hpp"

namespace cascade {

/// Closed-form quantities that can be tabulated against epsilon.
enum class Quantity {
    n_bar,
    var_plus,
    var_minus,
    vacuum,
    f_a,
    f_b,
    f_c,
    f_d,
    s_plus,
    s_minus,
    s_sup,
    n_s,
};

/// Canonical selector text, e.g. "s_plus".
std::string_view quantity_name(Quantity q);

/// Accepts canonical names; '-' may stand in for '_' ("s-plus").
/// Throws ConfigError listing the valid selectors.
Quantity parse_quantity(std::string_view text);

std::vector<Quantity> all_quantities();

/// Evaluate one quantity at the given parameters.
double evaluate(Quantity q, const SystemParams& params);

/// Rates held fixed while epsilon is swept.
struct BaseRates {
    double gamma_c = 0.5;
    double kappa = 0.8;
    double gamma = 0.3;
};

struct SweepSpec {
    BaseRates base;
    /// Spontaneous-emission rates to sweep; base.gamma is ignored when non-empty.
    std::vector<double> gammas;
    double eps_min = 0.0;
    double eps_max = 2.0;
    std::size_t points = 401;
    /// Columns are quantity-major: every gamma for the first quantity, then the next.
    std::vector<Quantity> quantities;
};

struct SweepTable {
    std::vector<std::string> columns;   // "epsilon" first
    std::vector<std::vector<double>> rows;

    std::size_t column_index(std::string_view name) const;
    std::vector<double> column(std::string_view name) const;
};

/// Uniform grid over [eps_min, eps_max] including both endpoints. Columns
/// follow spec.quantities; with more than one gamma each quantity expands
/// to one column per gamma, named "<quantity>_gamma<value>".
SweepTable sweep(const SweepSpec& spec);

/// CSV with a header row, '.' decimals and shortest round-trip numbers.
void write_csv(std::ostream& out, const SweepTable& table);

struct OptimumResult {
    double eps_star = 0.0;
    double value_star = 0.0;
    double bracket = 0.0;
    std::size_t evaluations = 0;
};

/// The maximum sits on an end of the search bracket, so there is no
/// interior optimum to report (e.g. s_minus, which increases monotonically).
class BoundaryMaximum : public std::runtime_error {
public:
    BoundaryMaximum(bool at_upper, double eps, double value, std::size_t evaluations);

    bool at_upper() const noexcept { return at_upper_; }
    double eps() const noexcept { return eps_; }
    double value() const noexcept { return value_; }
    std::size_t evaluations() const noexcept { return evaluations_; }

private:
    bool at_upper_;
    double eps_;
    double value_;
    std::size_t evaluations_;
};

/// Golden-section search for the epsilon maximizing `q` on [lo, hi].
OptimumResult maximize(const BaseRates& base, Quantity q, std::pair<double, double> bracket,
                       double tol = 1e-8);

}  // namespace cascade
