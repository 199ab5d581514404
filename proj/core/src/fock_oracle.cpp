#include "cascade/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <type_traits>

#include "cascade/errors.hpp"
#include "cascade/format.hpp"
#include "cascade/single_mode.hpp"

namespace cascade {

double CavityRates::fastest() const noexcept {
    return std::max({kappa, gamma, g, eta});
}

CavityRates rates_of(const SystemParams& params) {
    return {params.g, params.kappa, params.eta, params.gamma};
}

namespace {

void validate_rates(const CavityRates& r) {
    auto finite = [](double v, const char* field) {
        if (!std::isfinite(v)) throw InvalidParameter(field, "must be finite");
    };
    finite(r.g, "g");
    finite(r.kappa, "kappa");
    finite(r.eta, "eta");
    finite(r.gamma, "gamma");
    if (!(r.kappa > 0.0)) throw InvalidParameter("kappa", "must be > 0");
    if (r.g < 0.0) throw InvalidParameter("g", "must be >= 0");
    if (r.eta < 0.0) throw InvalidParameter("eta", "must be >= 0");
    if (r.gamma < 0.0) throw InvalidParameter("gamma", "must be >= 0");
}

void validate_config(const FockConfig& c) {
    if (c.dim_b < 2 || c.dim_a1 < 2 || c.dim_a2 < 2) {
        throw ConfigError("every Fock dimension must be >= 2");
    }
    if (c.hilbert_dimension() > c.dimension_cap) {
        throw ConfigError("Hilbert dimension " + std::to_string(c.hilbert_dimension()) +
                          " exceeds the cap of " + std::to_string(c.dimension_cap));
    }
    if (!(c.leak_tolerance > 0.0)) throw InvalidParameter("leak_tolerance", "must be > 0");
    if (!(c.residual_tolerance > 0.0)) throw InvalidParameter("residual_tolerance", "must be > 0");
}

}  // namespace

double FockConfig::resolved_dt(const CavityRates& rates) const {
    const double bound = 0.02 / rates.fastest();
    if (!dt) return bound;
    if (!(*dt > 0.0)) throw InvalidParameter("dt", "must be > 0");
    // Relative slack so that a bound printed and parsed back is accepted.
    if (*dt > bound * (1.0 + 1e-12)) {
        throw InvalidParameter("dt", "must be <= 0.02 / max(kappa, gamma, g, eta) = " + format_full(bound));
    }
    return *dt;
}

double FockConfig::resolved_t_end(const CavityRates& rates) const {
    if (t_end) {
        if (!(*t_end > 0.0)) throw InvalidParameter("t_end", "must be > 0");
        return *t_end;
    }
    double slowest = rates.kappa / 2.0;
    const double atomic = 4.0 * rates.g * rates.g / rates.kappa + rates.gamma;
    if (atomic > 0.0) slowest = std::min(slowest, atomic);
    return 200.0 / slowest;
}

FockBasis::FockBasis(std::size_t dim_b, std::size_t dim_a1, std::size_t dim_a2)
    : dim_b_(dim_b), dim_a1_(dim_a1), dim_a2_(dim_a2) {}

std::size_t FockBasis::index(Level level, std::size_t nb, std::size_t n1, std::size_t n2) const noexcept {
    return ((static_cast<std::size_t>(level) * dim_b_ + nb) * dim_a1_ + n1) * dim_a2_ + n2;
}

FockBasis::Labels FockBasis::labels(std::size_t index) const noexcept {
    Labels l{};
    l.n2 = index % dim_a2_;
    index /= dim_a2_;
    l.n1 = index % dim_a1_;
    index /= dim_a1_;
    l.nb = index % dim_b_;
    l.level = static_cast<Level>(index / dim_b_);
    return l;
}

ShiftOperator ShiftOperator::after(const ShiftOperator& other) const {
    ShiftOperator out;
    out.target.assign(other.size(), -1);
    out.coef.assign(other.size(), 0.0);
    for (std::size_t k = 0; k < other.size(); ++k) {
        const long mid = other.target[k];
        if (mid < 0) continue;
        const auto m = static_cast<std::size_t>(mid);
        if (target[m] < 0) continue;
        out.target[k] = target[m];
        out.coef[k] = coef[m] * other.coef[k];
    }
    return out;
}

namespace {

enum class Mode { b, a1, a2 };

ShiftOperator atomic_transition(const FockBasis& basis, Level from, Level to) {
    ShiftOperator op;
    op.target.assign(basis.size(), -1);
    op.coef.assign(basis.size(), 0.0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto l = basis.labels(k);
        if (l.level != from) continue;
        op.target[k] = static_cast<long>(basis.index(to, l.nb, l.n1, l.n2));
        op.coef[k] = 1.0;
    }
    return op;
}

ShiftOperator ladder(const FockBasis& basis, Mode mode, bool raise) {
    ShiftOperator op;
    op.target.assign(basis.size(), -1);
    op.coef.assign(basis.size(), 0.0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto l = basis.labels(k);
        std::size_t* n = mode == Mode::b ? &l.nb : mode == Mode::a1 ? &l.n1 : &l.n2;
        const std::size_t dim = mode == Mode::b ? basis.dim_b() : mode == Mode::a1 ? basis.dim_a1() : basis.dim_a2();
        if (raise) {
            if (*n + 1 >= dim) continue;
            *n += 1;
            op.coef[k] = std::sqrt(static_cast<double>(*n));
        } else {
            if (*n == 0) continue;
            op.coef[k] = std::sqrt(static_cast<double>(*n));
            *n -= 1;
        }
        op.target[k] = static_cast<long>(basis.index(l.level, l.nb, l.n1, l.n2));
    }
    return op;
}

// Adds coeff * (X - X^T) to the triplet list.
void add_antisymmetric(std::vector<Eigen::Triplet<double>>& triplets, const ShiftOperator& x, double coeff) {
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x.target[k] < 0) continue;
        const auto row = static_cast<int>(x.target[k]);
        const auto col = static_cast<int>(k);
        triplets.emplace_back(row, col, coeff * x.coef[k]);
        triplets.emplace_back(col, row, -coeff * x.coef[k]);
    }
}

// Tr(rho O) for a shift operator: sum_k coef[k] rho(k, target[k]).
template <class Matrix>
auto expectation(const Matrix& rho, const ShiftOperator& op) {
    typename Matrix::Scalar sum{};
    for (std::size_t k = 0; k < op.size(); ++k) {
        if (op.target[k] < 0) continue;
        sum += op.coef[k] * rho(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(op.target[k]));
    }
    return sum;
}

// Source range and index offset of an operator whose every surviving basis
// state moves by the same amount, with coefficients zeroed where annihilated.
struct ConstantShift {
    Eigen::Index begin = 0;
    Eigen::Index offset = 0;
    Eigen::VectorXd coef;
};

std::optional<ConstantShift> constant_shift(const ShiftOperator& op) {
    long first = -1;
    long last = -1;
    long offset = 0;
    for (std::size_t k = 0; k < op.size(); ++k) {
        if (op.target[k] < 0) continue;
        const auto src = static_cast<long>(k);
        if (first < 0) {
            first = src;
            offset = op.target[k] - src;
        } else if (op.target[k] - src != offset) {
            throw InternalError("operator is not a constant index shift");
        }
        last = src;
    }
    if (first < 0) return std::nullopt;
    ConstantShift shift;
    shift.begin = first;
    shift.offset = offset;
    shift.coef = Eigen::VectorXd::Zero(last - first + 1);
    for (long k = first; k <= last; ++k) {
        if (op.target[static_cast<std::size_t>(k)] >= 0) shift.coef(k - first) = op.coef[static_cast<std::size_t>(k)];
    }
    return shift;
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

FockBasis checked_basis(const CavityRates& rates, const FockConfig& config) {
    validate_rates(rates);
    validate_config(config);
    return FockBasis(config.dim_b, config.dim_a1, config.dim_a2);
}

}  // namespace

ModelOperators make_operators(const FockBasis& basis) {
    ModelOperators ops;
    ops.sigma_a = atomic_transition(basis, Level::a, Level::b);
    ops.sigma_b = atomic_transition(basis, Level::b, Level::c);
    ops.sigma_c = atomic_transition(basis, Level::a, Level::c);
    ops.sigma_a_dag = atomic_transition(basis, Level::b, Level::a);
    ops.sigma_b_dag = atomic_transition(basis, Level::c, Level::b);
    ops.sigma_c_dag = atomic_transition(basis, Level::c, Level::a);
    ops.b = ladder(basis, Mode::b, false);
    ops.a1 = ladder(basis, Mode::a1, false);
    ops.a2 = ladder(basis, Mode::a2, false);
    ops.b_dag = ladder(basis, Mode::b, true);
    ops.a1_dag = ladder(basis, Mode::a1, true);
    ops.a2_dag = ladder(basis, Mode::a2, true);
    return ops;
}

Liouvillian::Liouvillian(const CavityRates& rates, const FockConfig& config)
    : rates_(rates), basis_(checked_basis(rates, config)), ops_(make_operators(basis_)) {

    const auto n = static_cast<Eigen::Index>(basis_.size());

    // K = eta (b^dag - b) + g (sigma_c^dag b - b^dag sigma_c + sigma_a^dag a1
    //     - a1^dag sigma_a + sigma_b^dag a2 - a2^dag sigma_b)
    std::vector<Eigen::Triplet<double>> triplets;
    auto add_term = [&](const ShiftOperator& op, double scale) {
        add_antisymmetric(triplets, op, scale);
        add_antisymmetric_shift(op, scale);
    };
    if (rates.eta != 0.0) add_term(ops_.b_dag, rates.eta);
    if (rates.g != 0.0) {
        add_term(ops_.sigma_c_dag.after(ops_.b), rates.g);
        add_term(ops_.sigma_a_dag.after(ops_.a1), rates.g);
        add_term(ops_.sigma_b_dag.after(ops_.a2), rates.g);
    }
    k_.resize(n, n);
    k_.setFromTriplets(triplets.begin(), triplets.end());
    k_.makeCompressed();

    half_decay_ = Eigen::VectorXd::Zero(n);
    auto add_jump = [&](double rate, const ShiftOperator& op) {
        if (rate == 0.0) return;
        auto shift = constant_shift(op);
        if (!shift) return;
        half_decay_.segment(shift->begin, shift->coef.size()).array() += 0.5 * rate * shift->coef.array().square();
        Jump jump;
        jump.begin = shift->begin;
        jump.extent = shift->coef.size();
        jump.offset = shift->offset;
        jump.rate = rate;
        jump.coef = shift->coef;
        jumps_.push_back(std::move(jump));
    };
    add_jump(rates.gamma, ops_.sigma_a);
    add_jump(rates.gamma, ops_.sigma_b);
    add_jump(rates.gamma, ops_.sigma_c);
    add_jump(rates.kappa, ops_.b);
    add_jump(rates.kappa, ops_.a1);
    add_jump(rates.kappa, ops_.a2);
}

void Liouvillian::add_antisymmetric_shift(const ShiftOperator& op, double scale) {
    auto shift = constant_shift(op);
    if (!shift) return;
    // scale * op sends begin + k to begin + offset + k; its negated transpose goes back.
    k_shifts_.push_back({shift->begin, shift->begin + shift->offset, scale * shift->coef});
    k_shifts_.push_back({shift->begin + shift->offset, shift->begin, -scale * shift->coef});
}

void Liouvillian::add_jumps(const Eigen::Ref<const Eigen::MatrixXd>& rho, Eigen::MatrixXd& out) const {
    for (const Jump& j : jumps_) {
        const Eigen::Index dst = j.begin + j.offset;
        for (Eigen::Index q = 0; q < j.extent; ++q) {
            out.col(dst + q).segment(dst, j.extent) +=
                j.column_factor(q) * j.coef.cwiseProduct(rho.col(j.begin + q).segment(j.begin, j.extent));
        }
    }
}

template <class Matrix>
void Liouvillian::apply_impl(const Matrix& rho, Matrix& out) const {
    const Eigen::Index n = rho.rows();
    out.resize(n, n);
    out.noalias() = k_ * rho;
    out.noalias() -= rho * k_;

    for (Eigen::Index j = 0; j < n; ++j) {
        out.col(j).array() -= (half_decay_.array() + half_decay_(j)) * rho.col(j).array();
    }

    if constexpr (std::is_same_v<typename Matrix::Scalar, double>) {
        add_jumps(rho, out);
    } else {
        // Real generator: act on real and imaginary parts separately.
        Eigen::MatrixXd re = Eigen::MatrixXd::Zero(n, n);
        Eigen::MatrixXd im = Eigen::MatrixXd::Zero(n, n);
        add_jumps(rho.real(), re);
        add_jumps(rho.imag(), im);
        out.real() += re;
        out.imag() += im;
    }
}

void Liouvillian::apply_symmetric(const Eigen::MatrixXd& rho, Eigen::MatrixXd& out) const {
    // For symmetric rho, K antisymmetric and J(rho) symmetric,
    //   L rho = M + M^T with M = K rho - diag(h) rho + J(rho) / 2,
    // where h is half_decay_. M is built one column block at a time so the
    // working set stays in cache; M + M^T is then formed in place by tiles.
    const Eigen::Index n = rho.rows();
    out.resize(n, n);
    constexpr Eigen::Index width = 32;
    for (Eigen::Index c0 = 0; c0 < n; c0 += width) {
        const Eigen::Index w = std::min(width, n - c0);
        auto block = out.middleCols(c0, w);
        block.noalias() = -(half_decay_.asDiagonal() * rho.middleCols(c0, w));
        for (const RowShift& r : k_shifts_) {
            const Eigen::Index m = r.coef.size();
            block.middleRows(r.dst, m).noalias() += r.coef.asDiagonal() * rho.block(r.src, c0, m, w);
        }
        for (const Jump& j : jumps_) {
            // Columns dst + q of the jump block that fall inside this column block.
            const Eigen::Index dst = j.begin + j.offset;
            const Eigen::Index q0 = std::max(c0, dst) - dst;
            const Eigen::Index q1 = std::min(c0 + w, dst + j.extent) - dst;
            for (Eigen::Index q = q0; q < q1; ++q) {
                out.col(dst + q).segment(dst, j.extent) +=
                    (0.5 * j.column_factor(q)) * j.coef.cwiseProduct(rho.col(j.begin + q).segment(j.begin, j.extent));
            }
        }
    }
    constexpr Eigen::Index tile = 64;
    for (Eigen::Index tj = 0; tj < n; tj += tile) {
        const Eigen::Index j_end = std::min(tj + tile, n);
        for (Eigen::Index ti = tj; ti < n; ti += tile) {
            const Eigen::Index i_end = std::min(ti + tile, n);
            for (Eigen::Index j = tj; j < j_end; ++j) {
                for (Eigen::Index i = std::max(ti, j + 1); i < i_end; ++i) {
                    const double v = out(i, j) + out(j, i);
                    out(i, j) = v;
                    out(j, i) = v;
                }
            }
        }
        for (Eigen::Index j = tj; j < j_end; ++j) out(j, j) *= 2.0;
    }
}

void Liouvillian::apply(const Eigen::MatrixXd& rho, Eigen::MatrixXd& out) const { apply_impl(rho, out); }

void Liouvillian::apply(const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) const { apply_impl(rho, out); }

Eigen::MatrixXcd Liouvillian::hamiltonian() const {
    return std::complex<double>(0.0, 1.0) * Eigen::MatrixXd(k_).cast<std::complex<double>>();
}

Eigen::MatrixXd Liouvillian::ground_state() const {
    const auto n = static_cast<Eigen::Index>(dimension());
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(n, n);
    const auto g = static_cast<Eigen::Index>(basis_.index(Level::c, 0, 0, 0));
    rho(g, g) = 1.0;
    return rho;
}

Liouvillian build_generator(const CavityRates& rates, const FockConfig& config) {
    return Liouvillian(rates, config);
}

Liouvillian build_generator(const SystemParams& params, const FockConfig& config) {
    return Liouvillian(rates_of(params), config);
}

OracleMoments extract_moments(const Liouvillian& generator, const Eigen::MatrixXd& rho) {
    const FockBasis& basis = generator.basis();
    const ModelOperators& ops = generator.operators();

    OracleMoments m;
    double trace = 0.0;
    std::vector<double> top(3, 0.0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const double p = rho(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
        const auto l = basis.labels(k);
        trace += p;
        switch (l.level) {
            case Level::a: m.eta_a += p; break;
            case Level::b: m.eta_b += p; break;
            case Level::c: m.eta_c += p; break;
        }
        m.n_b += static_cast<double>(l.nb) * p;
        m.n_a1 += static_cast<double>(l.n1) * p;
        m.n_a2 += static_cast<double>(l.n2) * p;
        if (l.nb + 1 == basis.dim_b()) top[0] += p;
        if (l.n1 + 1 == basis.dim_a1()) top[1] += p;
        if (l.n2 + 1 == basis.dim_a2()) top[2] += p;
    }
    m.trace_error = std::abs(1.0 - trace);
    m.top_level_population = *std::max_element(top.begin(), top.end());
    m.sigma_c = expectation(rho, ops.sigma_c);
    m.mean_b = expectation(rho, ops.b);
    m.mean_b_sq = expectation(rho, ops.b.after(ops.b));
    return m;
}

OracleRun evolve_to_steady(const Liouvillian& generator, const FockConfig& config) {
    const double dt = config.resolved_dt(generator.rates());
    const double t_end = config.resolved_t_end(generator.rates());
    const auto max_steps = static_cast<std::size_t>(std::ceil(t_end / dt));
    const auto n = static_cast<Eigen::Index>(generator.dimension());

    OracleRun run;
    run.dt = dt;
    run.rho = generator.ground_state();

    Eigen::MatrixXd k1(n, n), k2(n, n), k3(n, n), k4(n, n), stage(n, n);
    generator.apply_symmetric(run.rho, k1);
    run.residual = max_abs(k1);

    std::size_t step = 0;
    while (run.residual > config.residual_tolerance && step < max_steps) {
        stage = run.rho + (0.5 * dt) * k1;
        generator.apply_symmetric(stage, k2);
        stage = run.rho + (0.5 * dt) * k2;
        generator.apply_symmetric(stage, k3);
        stage = run.rho + dt * k3;
        generator.apply_symmetric(stage, k4);
        run.rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        ++step;

        run.max_trace_error = std::max(run.max_trace_error, std::abs(1.0 - run.rho.trace()));
        if (step % 256 == 0) {
            run.max_asymmetry = std::max(run.max_asymmetry, max_abs(run.rho - run.rho.transpose()));
        }
        generator.apply_symmetric(run.rho, k1);
        run.residual = max_abs(k1);
    }
    run.max_asymmetry = std::max(run.max_asymmetry, max_abs(run.rho - run.rho.transpose()));
    run.steps = step;
    run.time = static_cast<double>(step) * dt;
    run.converged = run.residual <= config.residual_tolerance;
    run.moments = extract_moments(generator, run.rho);
    run.truncation_ok = run.moments.top_level_population <= config.leak_tolerance;
    return run;
}

OracleRun steady_run(const SystemParams& params, const FockConfig& config) {
    const Liouvillian generator = build_generator(params, config);
    OracleRun run = evolve_to_steady(generator, config);
    if (!run.converged) {
        throw NonConvergence("density matrix did not reach residual " + format_full(config.residual_tolerance) +
                                 " by t=" + format_full(run.time) + " (residual " + format_full(run.residual) + ")",
                             run.residual);
    }
    if (!run.truncation_ok) {
        throw TruncationError("top Fock level population " + format_full(run.moments.top_level_population) +
                                  " exceeds leak tolerance " + format_full(config.leak_tolerance) +
                                  "; increase the Fock dimensions",
                              run.moments.top_level_population);
    }
    return run;
}

OracleMoments steady_moments(const SystemParams& params, const FockConfig& config) {
    return steady_run(params, config).moments;
}

const FieldComparison& ComparisonReport::field(const std::string& name) const {
    for (const auto& f : fields) {
        if (f.name == name) return f;
    }
    throw ConfigError("no compared field named '" + name + "'");
}

std::string_view verdict_name(Verdict v) {
    return v == Verdict::pass ? "pass" : "outside_adiabatic_regime";
}

ComparisonReport compare_with_analytic(const SystemParams& params, const FockConfig& config,
                                       const ComparisonTolerances& tolerances) {
    validate(params);
    return compare_with_analytic(params, config, steady_run(params, config), tolerances);
}

ComparisonReport compare_with_analytic(const SystemParams& params, const FockConfig& config, const OracleRun& run,
                                       const ComparisonTolerances& tolerances) {
    validate(params);
    const OracleMoments& m = run.moments;
    const AtomicSteadyState st = atomic_steady_state(params);
    const FieldMoments fm = field_moments(params);

    ComparisonReport report;
    report.params = params;
    report.config = config;
    report.tolerances = tolerances;
    report.dt = run.dt;
    report.t_end = config.resolved_t_end(rates_of(params));
    report.time = run.time;
    report.steps = run.steps;
    report.residual = run.residual;
    report.trace_error = run.max_trace_error;
    report.top_level_population = m.top_level_population;

    auto add = [&](std::string name, double oracle, double analytic, double tol) {
        FieldComparison f;
        f.name = std::move(name);
        f.oracle = oracle;
        f.analytic = analytic;
        f.abs_dev = std::abs(oracle - analytic);
        f.rel_dev = analytic != 0.0 ? f.abs_dev / std::abs(analytic) : (f.abs_dev == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
        f.tolerance = tol;
        f.pass = f.abs_dev <= tol * std::abs(analytic) + tolerances.absolute_floor;
        report.fields.push_back(std::move(f));
    };
    const double vac = params.vacuum_level();
    add("eta_a", m.eta_a, st.eta_a, tolerances.populations);
    add("eta_b", m.eta_b, st.eta_b, tolerances.populations);
    add("eta_c", m.eta_c, st.eta_c, tolerances.populations);
    add("sigma_c", m.sigma_c.real(), st.sigma_c, tolerances.populations);
    add("mean_b", m.mean_b.real(), fm.mean_b, tolerances.field_moments);
    add("mean_b_sq", m.mean_b_sq.real(), fm.mean_b_squared, tolerances.field_moments);
    add("n_b", m.n_b, fm.n_bar, tolerances.field_moments);
    add("n_a1", m.n_a1, vac * st.eta_a, tolerances.field_moments);
    add("n_a2", m.n_a2, vac * st.eta_b, tolerances.field_moments);

    const bool all_pass = std::all_of(report.fields.begin(), report.fields.end(), [](const auto& f) { return f.pass; });
    report.verdict = all_pass ? Verdict::pass : Verdict::outside_adiabatic_regime;
    return report;
}

void write_comparison_text(std::ostream& out, const ComparisonReport& r) {
    const auto& p = r.params;
    out << "oracle_comparison:\n";
    out << "  verdict: " << verdict_name(r.verdict) << '\n';
    out << "  params:\n";
    out << "    g: " << format_full(p.g) << '\n';
    out << "    kappa: " << format_full(p.kappa) << '\n';
    out << "    eta: " << format_full(p.eta) << '\n';
    out << "    gamma: " << format_full(p.gamma) << '\n';
    out << "    gamma_c: " << format_full(p.gamma_c) << '\n';
    out << "    epsilon: " << format_full(p.epsilon) << '\n';
    out << "    kappa_over_g: " << format_full(r.kappa_over_g()) << '\n';
    out << "  config:\n";
    out << "    dims: " << r.config.dim_b << ',' << r.config.dim_a1 << ',' << r.config.dim_a2 << '\n';
    out << "    hilbert_dimension: " << r.config.hilbert_dimension() << '\n';
    out << "    dt: " << format_full(r.dt) << '\n';
    out << "    t_end: " << format_full(r.t_end) << '\n';
    out << "    residual_tolerance: " << format_full(r.config.residual_tolerance) << '\n';
    out << "    leak_tolerance: " << format_full(r.config.leak_tolerance) << '\n';
    out << "  run:\n";
    out << "    time: " << format_full(r.time) << '\n';
    out << "    steps: " << r.steps << '\n';
    out << "    residual: " << format_full(r.residual) << '\n';
    out << "    trace_error: " << format_full(r.trace_error) << '\n';
    out << "    top_level_population: " << format_full(r.top_level_population) << '\n';
    out << "  fields:\n";
    for (const auto& f : r.fields) {
        out << "    " << f.name << ":\n";
        out << "      oracle: " << format_full(f.oracle) << '\n';
        out << "      analytic: " << format_full(f.analytic) << '\n';
        out << "      abs_dev: " << format_full(f.abs_dev) << '\n';
        out << "      rel_dev: " << format_full(f.rel_dev) << '\n';
        out << "      tolerance: " << format_full(f.tolerance) << '\n';
        out << "      pass: " << (f.pass ? "true" : "false") << '\n';
    }
    out << "  note: >-\n";
    out << "    Only normally ordered moments are compared. The closed-form quadrature\n";
    out << "    variances use a vacuum level of gamma_c/kappa with no density-matrix\n";
    out << "    counterpart and are not checked here. The closed forms assume adiabatic\n";
    out << "    elimination of the cavity modes (kappa >> g); parameter sets with\n";
    out << "    modest kappa/g, including the figure parameters, are reported as\n";
    out << "    outside_adiabatic_regime rather than as failures.\n";
}

void write_comparison_csv(std::ostream& out, const ComparisonReport& r) {
    out << "field,oracle,analytic,abs_dev,rel_dev,tolerance,pass\n";
    for (const auto& f : r.fields) {
        out << f.name << ',' << format_full(f.oracle) << ',' << format_full(f.analytic) << ','
            << format_full(f.abs_dev) << ',' << format_full(f.rel_dev) << ',' << format_full(f.tolerance) << ','
            << (f.pass ? "true" : "false") << '\n';
    }
}

}  // namespace cascade
