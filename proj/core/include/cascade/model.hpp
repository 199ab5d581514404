#pragma once

namespace cascade {

/// Rates of the driven cascade-atom/cavity system. All rates share one
/// arbitrary inverse-time unit.
///
/// `gamma_c` (stimulated emission decay constant, 4 g^2 / kappa) and
/// `epsilon` (effective drive, 2 g eta / kappa) are derived; build values
/// through derive_params() or params_from_plot_set() so they stay consistent.
struct SystemParams {
    double g = 0.0;
    double kappa = 0.0;
    double eta = 0.0;
    double gamma = 0.0;
    double gamma_c = 0.0;
    double epsilon = 0.0;

    /// gamma_c + gamma, the combined atomic decay rate in every closed form.
    double total_decay() const noexcept { return gamma_c + gamma; }
    /// gamma_c / kappa: the single-mode vacuum quadrature variance.
    double vacuum_level() const noexcept { return gamma_c / kappa; }
};

/// Build from Hamiltonian rates. Throws InvalidParameter for kappa <= 0,
/// g <= 0, eta < 0, gamma < 0 or non-finite input.
SystemParams derive_params(double g, double kappa, double eta, double gamma);

/// Build from the (gamma_c, kappa, gamma, epsilon) set that the figures are
/// keyed to; g and eta are recovered by inversion. gamma_c and epsilon are
/// stored verbatim so that plot-parameter formulas see the exact inputs.
SystemParams params_from_plot_set(double gamma_c, double kappa, double gamma, double epsilon);

/// Same rates with a different drive.
SystemParams with_epsilon(const SystemParams& params, double epsilon);

/// Steady-state atomic expectation values. The steady state is real, so
/// everything here is a plain double.
struct AtomicSteadyState {
    double sigma_a = 0.0;
    double sigma_b = 0.0;
    double sigma_c = 0.0;
    double eta_a = 0.0;
    double eta_b = 0.0;
    double eta_c = 1.0;
};

/// Closed-form steady state of the adiabatically eliminated atom.
AtomicSteadyState atomic_steady_state(const SystemParams& params);

/// Throws InvalidParameter unless params satisfy the SystemParams invariants.
void validate(const SystemParams& params);

}  // namespace cascade
