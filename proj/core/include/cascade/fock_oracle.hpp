#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cascade/model.hpp"

namespace cascade {

/// Raw Hamiltonian and damping rates for the full model. Unlike
/// SystemParams this admits g = 0 (atom decoupled from every mode).
struct CavityRates {
    double g = 0.0;
    double kappa = 0.0;
    double eta = 0.0;
    double gamma = 0.0;

    double fastest() const noexcept;
};

CavityRates rates_of(const SystemParams& params);

/// Truncation and integration settings for the density-matrix evolution.
struct FockConfig {
    std::size_t dim_b = 6;
    std::size_t dim_a1 = 3;
    std::size_t dim_a2 = 3;
    /// Evolution horizon; defaults to 200 / (slowest relaxation rate).
    std::optional<double> t_end;
    /// RK4 step; defaults to 0.02 / max(kappa, gamma, g, eta), which is also its upper bound.
    std::optional<double> dt;
    double leak_tolerance = 1e-4;
    double residual_tolerance = 1e-9;
    std::size_t dimension_cap = 2000;

    std::size_t hilbert_dimension() const noexcept { return 3 * dim_b * dim_a1 * dim_a2; }
    double resolved_dt(const CavityRates& rates) const;
    double resolved_t_end(const CavityRates& rates) const;
};

/// Atomic level labels; |a> top, |b> intermediate, |c> bottom.
enum class Level : int { a = 0, b = 1, c = 2 };

/// Product basis atom (x) b (x) a1 (x) a2, with a2 varying fastest.
class FockBasis {
public:
    FockBasis(std::size_t dim_b, std::size_t dim_a1, std::size_t dim_a2);

    std::size_t size() const noexcept { return 3 * dim_b_ * dim_a1_ * dim_a2_; }
    std::size_t index(Level level, std::size_t nb, std::size_t n1, std::size_t n2) const noexcept;

    struct Labels {
        Level level;
        std::size_t nb;
        std::size_t n1;
        std::size_t n2;
    };
    Labels labels(std::size_t index) const noexcept;

    std::size_t dim_b() const noexcept { return dim_b_; }
    std::size_t dim_a1() const noexcept { return dim_a1_; }
    std::size_t dim_a2() const noexcept { return dim_a2_; }

private:
    std::size_t dim_b_;
    std::size_t dim_a1_;
    std::size_t dim_a2_;
};

/// An operator with at most one nonzero per column: basis state k maps to
/// target[k] with amplitude coef[k] (target < 0 means annihilated). Every
/// ladder and atomic transition operator in the model has this form.
struct ShiftOperator {
    std::vector<long> target;
    std::vector<double> coef;

    std::size_t size() const noexcept { return target.size(); }
    /// this * other (apply `other` first).
    ShiftOperator after(const ShiftOperator& other) const;
};

/// The elementary operators on the truncated space.
struct ModelOperators {
    ShiftOperator sigma_a;  // |b><a|
    ShiftOperator sigma_b;  // |c><b|
    ShiftOperator sigma_c;  // |c><a|
    ShiftOperator sigma_a_dag;
    ShiftOperator sigma_b_dag;
    ShiftOperator sigma_c_dag;
    ShiftOperator b;
    ShiftOperator a1;
    ShiftOperator a2;
    ShiftOperator b_dag;
    ShiftOperator a1_dag;
    ShiftOperator a2_dag;
};

ModelOperators make_operators(const FockBasis& basis);

/// Matrix-free Lindblad generator
///   rho -> -i[H, rho] + gamma sum_j D[sigma_j] rho + kappa sum_m D[mode_m] rho,
/// D[L] rho = L rho L^dag - {L^dag L, rho}/2, with the resonant Hamiltonian
///   H = i eta (b^dag - b) + i g (sigma_c^dag b - b^dag sigma_c
///       + sigma_a^dag a1 - a1^dag sigma_a + sigma_b^dag a2 - a2^dag sigma_b).
/// H = iK with K real antisymmetric, so the commutator term is [K, rho].
class Liouvillian {
public:
    Liouvillian(const CavityRates& rates, const FockConfig& config);

    std::size_t dimension() const noexcept { return basis_.size(); }
    const FockBasis& basis() const noexcept { return basis_; }
    const ModelOperators& operators() const noexcept { return ops_; }
    const CavityRates& rates() const noexcept { return rates_; }

    void apply(const Eigen::MatrixXd& rho, Eigen::MatrixXd& out) const;
    void apply(const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) const;

    /// Same as apply() for a real symmetric rho (the case for any evolution
    /// started from a real state), using [K, rho] = K rho + (K rho)^T.
    void apply_symmetric(const Eigen::MatrixXd& rho, Eigen::MatrixXd& out) const;

    /// Dense Hamiltonian, for inspection and tests.
    Eigen::MatrixXcd hamiltonian() const;

    /// |c> (x) |0,0,0> as a density matrix.
    Eigen::MatrixXd ground_state() const;

private:
    // L rho L^dag for a jump that moves basis index k to k + offset, with
    // amplitude coef(k - begin) on sources [begin, begin + extent).
    struct Jump {
        Eigen::Index begin = 0;
        Eigen::Index extent = 0;
        Eigen::Index offset = 0;
        double rate = 0.0;
        Eigen::VectorXd coef;

        // The weight of entry (p, q) is rate * c_p * c_q = column_factor(q) * c_p.
        double column_factor(Eigen::Index q) const { return rate * coef(q); }
    };

    // Rows [dst, dst + extent) of K rho receive coef .* rows [src, src + extent) of rho.
    struct RowShift {
        Eigen::Index src = 0;
        Eigen::Index dst = 0;
        Eigen::VectorXd coef;
    };

    void add_antisymmetric_shift(const ShiftOperator& op, double scale);
    void add_jumps(const Eigen::Ref<const Eigen::MatrixXd>& rho, Eigen::MatrixXd& out) const;

    template <class Matrix>
    void apply_impl(const Matrix& rho, Matrix& out) const;

    CavityRates rates_;
    FockBasis basis_;
    ModelOperators ops_;
    Eigen::SparseMatrix<double> k_;        // H = i K
    std::vector<RowShift> k_shifts_;       // the same K as constant-offset row blocks
    Eigen::VectorXd half_decay_;           // diag of sum_j rate_j L_j^dag L_j / 2
    std::vector<Jump> jumps_;
};

/// Throws ConfigError when the Hilbert dimension exceeds the cap or a
/// dimension is below 2, and InvalidParameter for bad rates or steps.
Liouvillian build_generator(const SystemParams& params, const FockConfig& config);
Liouvillian build_generator(const CavityRates& rates, const FockConfig& config);

/// Normally ordered moments and populations read from a density matrix.
struct OracleMoments {
    double eta_a = 0.0;
    double eta_b = 0.0;
    double eta_c = 0.0;
    std::complex<double> sigma_c{};
    std::complex<double> mean_b{};
    std::complex<double> mean_b_sq{};
    double n_b = 0.0;
    double n_a1 = 0.0;
    double n_a2 = 0.0;
    double trace_error = 0.0;
    double top_level_population = 0.0;
};

OracleMoments extract_moments(const Liouvillian& generator, const Eigen::MatrixXd& rho);

/// Outcome of a long-time evolution from |c> (x) vacuum.
struct OracleRun {
    OracleMoments moments;
    Eigen::MatrixXd rho;
    double time = 0.0;
    double dt = 0.0;
    std::size_t steps = 0;
    double residual = 0.0;
    bool converged = false;
    double max_trace_error = 0.0;
    double max_asymmetry = 0.0;
    bool truncation_ok = true;
};

/// Fixed-step RK4 on rho until max|L rho| <= config.residual_tolerance or the
/// horizon. Never throws on non-convergence or leakage; inspect the flags.
OracleRun evolve_to_steady(const Liouvillian& generator, const FockConfig& config);

/// evolve_to_steady() plus the error contract: NonConvergence when the
/// horizon is reached, TruncationError when the top Fock level holds more
/// than leak_tolerance.
OracleMoments steady_moments(const SystemParams& params, const FockConfig& config);
OracleRun steady_run(const SystemParams& params, const FockConfig& config);

struct ComparisonTolerances {
    double populations = 0.02;    // eta_a, eta_b, eta_c, sigma_c (relative)
    double field_moments = 0.05;  // <b>, <b^2>, <b^dag b>, <a1^dag a1>, <a2^dag a2> (relative)
    double absolute_floor = 1e-8;
};

struct FieldComparison {
    std::string name;
    double oracle = 0.0;
    double analytic = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

enum class Verdict { pass, outside_adiabatic_regime };

struct ComparisonReport {
    SystemParams params;
    FockConfig config;
    ComparisonTolerances tolerances;
    double dt = 0.0;
    double t_end = 0.0;
    double time = 0.0;
    std::size_t steps = 0;
    double residual = 0.0;
    double trace_error = 0.0;
    double top_level_population = 0.0;
    std::vector<FieldComparison> fields;
    Verdict verdict = Verdict::pass;

    double kappa_over_g() const noexcept { return params.kappa / params.g; }
    const FieldComparison& field(const std::string& name) const;
};

/// Run the oracle and set it beside the adiabatic closed forms. Only normally
/// ordered quantities are compared: the closed-form quadrature variances use
/// a vacuum level of gamma_c/kappa that has no density-matrix counterpart.
ComparisonReport compare_with_analytic(const SystemParams& params, const FockConfig& config,
                                       const ComparisonTolerances& tolerances = {});
/// Same comparison for a run already produced by steady_run(params, config).
ComparisonReport compare_with_analytic(const SystemParams& params, const FockConfig& config, const OracleRun& run,
                                       const ComparisonTolerances& tolerances = {});

std::string_view verdict_name(Verdict v);

/// Nested key/value text.
void write_comparison_text(std::ostream& out, const ComparisonReport& report);
/// One row per compared field.
void write_comparison_csv(std::ostream& out, const ComparisonReport& report);

}  // namespace cascade
