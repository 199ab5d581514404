#include "cascade/model.hpp"

#include <cmath>

#include "cascade/errors.hpp"

namespace cascade {

namespace {

void require_finite(double value, const char* field) {
    if (!std::isfinite(value)) throw InvalidParameter(field, "must be finite");
}

void require_positive(double value, const char* field) {
    require_finite(value, field);
    if (!(value > 0.0)) throw InvalidParameter(field, "must be > 0");
}

void require_non_negative(double value, const char* field) {
    require_finite(value, field);
    if (value < 0.0) throw InvalidParameter(field, "must be >= 0");
}

}  // namespace

void validate(const SystemParams& p) {
    require_positive(p.g, "g");
    require_positive(p.kappa, "kappa");
    require_non_negative(p.eta, "eta");
    require_non_negative(p.gamma, "gamma");
    require_positive(p.gamma_c, "gamma_c");
    require_non_negative(p.epsilon, "epsilon");
}

SystemParams derive_params(double g, double kappa, double eta, double gamma) {
    require_positive(kappa, "kappa");
    require_positive(g, "g");
    require_non_negative(eta, "eta");
    require_non_negative(gamma, "gamma");

    SystemParams p;
    p.g = g;
    p.kappa = kappa;
    p.eta = eta;
    p.gamma = gamma;
    p.gamma_c = 4.0 * g * g / kappa;
    p.epsilon = 2.0 * g * eta / kappa;
    // g can be small enough for gamma_c to underflow.
    require_positive(p.gamma_c, "gamma_c");
    return p;
}

SystemParams params_from_plot_set(double gamma_c, double kappa, double gamma, double epsilon) {
    require_positive(gamma_c, "gamma_c");
    require_positive(kappa, "kappa");
    require_non_negative(gamma, "gamma");
    require_non_negative(epsilon, "epsilon");

    SystemParams p;
    p.kappa = kappa;
    p.gamma = gamma;
    p.gamma_c = gamma_c;
    p.epsilon = epsilon;
    p.g = std::sqrt(gamma_c * kappa) / 2.0;
    p.eta = epsilon * kappa / (2.0 * p.g);
    return p;
}

SystemParams with_epsilon(const SystemParams& params, double epsilon) {
    return params_from_plot_set(params.gamma_c, params.kappa, params.gamma, epsilon);
}

AtomicSteadyState atomic_steady_state(const SystemParams& params) {
    validate(params);
    const double s = params.total_decay();
    const double e = params.epsilon;
    const double denom = s * s + 3.0 * e * e;

    AtomicSteadyState st;
    st.sigma_a = 0.0;
    st.sigma_b = 0.0;
    st.sigma_c = e * s / denom;
    st.eta_a = e * e / denom;
    st.eta_b = st.eta_a;
    st.eta_c = (e * e + s * s) / denom;
    return st;
}

}  // namespace cascade
