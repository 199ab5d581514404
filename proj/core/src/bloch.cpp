#include "cascade/bloch.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <string>

#include "cascade/errors.hpp"
#include "cascade/format.hpp"

namespace cascade {

namespace {

// Real coordinates of a BlochState, in the order used by the linear solve.
using Coords = std::array<double, 8>;

Coords to_coords(const BlochState& s) {
    return {s.sigma_a.real(), s.sigma_a.imag(), s.sigma_b.real(), s.sigma_b.imag(),
            s.sigma_c.real(), s.sigma_c.imag(), s.eta_a, s.eta_b};
}

Coords to_coords(const BlochDerivative& d) {
    return {d.sigma_a.real(), d.sigma_a.imag(), d.sigma_b.real(), d.sigma_b.imag(),
            d.sigma_c.real(), d.sigma_c.imag(), d.eta_a, d.eta_b};
}

BlochState from_coords(const Coords& c, double time) {
    BlochState s;
    s.sigma_a = {c[0], c[1]};
    s.sigma_b = {c[2], c[3]};
    s.sigma_c = {c[4], c[5]};
    s.eta_a = c[6];
    s.eta_b = c[7];
    s.time = time;
    return s;
}

Coords axpy(const Coords& x, double h, const Coords& k) {
    Coords r;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = x[i] + h * k[i];
    return r;
}

double max_abs(const Coords& c) {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

Coords rhs_coords(const Coords& x, const SystemParams& p) {
    return to_coords(bloch_rhs(from_coords(x, 0.0), p));
}

}  // namespace

BlochState BlochState::from_steady(const AtomicSteadyState& st) {
    BlochState s;
    s.sigma_a = st.sigma_a;
    s.sigma_b = st.sigma_b;
    s.sigma_c = st.sigma_c;
    s.eta_a = st.eta_a;
    s.eta_b = st.eta_b;
    return s;
}

double BlochDerivative::max_norm() const noexcept {
    return max_abs(to_coords(*this));
}

BlochDerivative bloch_rhs(const BlochState& state, const SystemParams& params) {
    const double s = params.total_decay();
    const double e = params.epsilon;

    BlochDerivative d;
    d.sigma_a = -1.5 * s * state.sigma_a + e * std::conj(state.sigma_b);
    d.sigma_b = -0.5 * s * state.sigma_b - e * std::conj(state.sigma_a);
    d.sigma_c = -s * state.sigma_c + e * (state.eta_c() - state.eta_a);
    d.eta_a = -2.0 * s * state.eta_a + e * 2.0 * state.sigma_c.real();
    d.eta_b = -s * state.eta_b + s * state.eta_a;
    return d;
}

Trajectory integrate_to_steady(const SystemParams& params, const BlochState& initial,
                               double tolerance) {
    validate(params);
    if (!(tolerance > 0.0)) throw InvalidParameter("tolerance", "must be > 0");

    const double s = params.total_decay();
    const double h = 0.05 / std::max(s, params.epsilon);
    const double horizon = 1e3 / s;
    const auto max_steps = static_cast<std::size_t>(std::ceil(horizon / h));

    Trajectory traj;
    traj.step = h;

    Coords x = to_coords(initial);
    double t = initial.time;
    traj.samples.push_back(from_coords(x, t));

    Coords k1 = rhs_coords(x, params);
    traj.residual = max_abs(k1);
    for (std::size_t n = 0; traj.residual > tolerance; ++n) {
        if (n == max_steps) {
            throw NonConvergence("atomic equations did not reach tolerance " +
                                     format_full(tolerance) + " by t=" + format_full(t) +
                                     " (residual " + format_full(traj.residual) + ")",
                                 traj.residual);
        }
        const Coords k2 = rhs_coords(axpy(x, 0.5 * h, k1), params);
        const Coords k3 = rhs_coords(axpy(x, 0.5 * h, k2), params);
        const Coords k4 = rhs_coords(axpy(x, h, k3), params);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        t = initial.time + static_cast<double>(n + 1) * h;
        traj.samples.push_back(from_coords(x, t));
        k1 = rhs_coords(x, params);
        traj.residual = max_abs(k1);
    }
    traj.converged = true;
    return traj;
}

AtomicSteadyState steady_state_by_linear_solve(const SystemParams& params) {
    validate(params);

    // The right-hand side is affine in the real coordinates: f(x) = A x + c.
    const Coords zero{};
    const Coords c = rhs_coords(zero, params);
    Eigen::Matrix<double, 8, 8> a;
    Eigen::Matrix<double, 8, 1> rhs;
    for (int j = 0; j < 8; ++j) {
        Coords unit{};
        unit[static_cast<std::size_t>(j)] = 1.0;
        const Coords col = rhs_coords(unit, params);
        for (int i = 0; i < 8; ++i) {
            a(i, j) = col[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)];
        }
    }
    for (int i = 0; i < 8; ++i) rhs(i) = -c[static_cast<std::size_t>(i)];

    const Eigen::FullPivLU<Eigen::Matrix<double, 8, 8>> lu(a);
    if (!lu.isInvertible()) {
        throw InternalError("steady-state system is singular (gamma_c + gamma = " +
                            format_full(params.total_decay()) + ")");
    }
    const Eigen::Matrix<double, 8, 1> x = lu.solve(rhs);

    AtomicSteadyState st;
    st.sigma_a = x(0);
    st.sigma_b = x(2);
    st.sigma_c = x(4);
    st.eta_a = x(6);
    st.eta_b = x(7);
    st.eta_c = 1.0 - st.eta_a - st.eta_b;
    return st;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
    out << "time,sigma_a_re,sigma_a_im,sigma_b_re,sigma_b_im,sigma_c_re,sigma_c_im,eta_a,eta_b\n";
    for (const auto& s : trajectory.samples) {
        const Coords c = to_coords(s);
        out << format_full(s.time);
        for (double v : c) out << ',' << format_full(v);
        out << '\n';
    }
}

}  // namespace cascade
