#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "cascade/model.hpp"

namespace cascade {

/// Atomic expectation values evolved by the adiabatically eliminated
/// equations of motion. eta_c is implied by normalization:
/// eta_c = 1 - eta_a - eta_b.
struct BlochState {
    std::complex<double> sigma_a{};
    std::complex<double> sigma_b{};
    std::complex<double> sigma_c{};
    double eta_a = 0.0;
    double eta_b = 0.0;
    double time = 0.0;

    double eta_c() const noexcept { return 1.0 - eta_a - eta_b; }

    /// Atom in the bottom level |c>: every component zero.
    static BlochState ground() { return {}; }
    static BlochState from_steady(const AtomicSteadyState& st);
};

struct BlochDerivative {
    std::complex<double> sigma_a{};
    std::complex<double> sigma_b{};
    std::complex<double> sigma_c{};
    double eta_a = 0.0;
    double eta_b = 0.0;

    /// Largest absolute real or imaginary component.
    double max_norm() const noexcept;
};

struct Trajectory {
    std::vector<BlochState> samples;
    double step = 0.0;
    bool converged = false;
    double residual = 0.0;

    const BlochState& final_state() const { return samples.back(); }
};

/// Right-hand side of the five atomic equations of motion; the conjugate
/// equations follow by conjugating the state.
BlochDerivative bloch_rhs(const BlochState& state, const SystemParams& params);

/// Fixed-step classical RK4 from `initial` until max|rhs| <= tolerance.
/// Step is 0.05 / max(gamma_c + gamma, epsilon); horizon 1e3 / (gamma_c + gamma).
/// Throws NonConvergence (carrying the residual) when the horizon is reached.
Trajectory integrate_to_steady(const SystemParams& params,
                               const BlochState& initial = BlochState::ground(),
                               double tolerance = 1e-10);

/// Steady state from the 8x8 real linear system obtained by zeroing the
/// equations of motion (real and imaginary parts, eta_c eliminated).
AtomicSteadyState steady_state_by_linear_solve(const SystemParams& params);

/// One CSV row per sample, header
/// time,sigma_a_re,sigma_a_im,sigma_b_re,sigma_b_im,sigma_c_re,sigma_c_im,eta_a,eta_b
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

}  // namespace cascade
