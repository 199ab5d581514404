#include "cascade/single_mode.hpp"

#include <cmath>

#include "cascade/errors.hpp"

namespace cascade {

PhotonReport mean_photon_number(const SystemParams& params) {
    const AtomicSteadyState st = atomic_steady_state(params);
    const double k = params.kappa;
    const double gc = params.gamma_c;
    const double s = params.total_decay();
    const double e = params.epsilon;

    PhotonReport r;
    r.drive_term = 4.0 * params.eta * params.eta / (k * k);
    r.absorbed_term = 8.0 * params.eta * params.g / (k * k) * st.sigma_c;
    r.emitted_term = gc / k * st.eta_a;
    r.n_bar = 4.0 * e * e / (k * gc) - (e * e / k) * (3.0 * gc + 4.0 * params.gamma) / (s * s + 3.0 * e * e);
    return r;
}

QuadratureReport quadrature_report(const SystemParams& params) {
    validate(params);
    const double s2 = params.total_decay() * params.total_decay();
    const double e2 = params.epsilon * params.epsilon;
    const double e4 = e2 * e2;
    const double denom = s2 + 3.0 * e2;
    const double vac = params.vacuum_level();

    const double plus_bracket = (6.0 * e4 + s2 * (s2 + e2)) / (denom * denom);
    const double minus_bracket = (2.0 * e2 + s2) / (3.0 * e2 + s2);

    QuadratureReport q;
    q.vacuum_level = vac;
    q.var_plus = vac * plus_bracket;
    q.var_minus = vac * minus_bracket;
    q.f_lower = vac * (s2 / (3.0 * e2 + s2));
    q.f_product = vac * std::sqrt((6.0 * e4 + s2 * (s2 + e2)) * (s2 + 2.0 * e2) / (denom * denom * denom));
    q.s_plus = 1.0 - plus_bracket;
    q.s_minus = 1.0 - minus_bracket;
    return q;
}

FieldMoments field_moments(const SystemParams& params) {
    const AtomicSteadyState st = atomic_steady_state(params);
    const double k = params.kappa;
    const double e = params.epsilon;

    FieldMoments m;
    m.mean_b = 2.0 / k * (params.eta - params.g * st.sigma_c);
    m.mean_b_squared = 4.0 * e * e / (k * params.gamma_c) - 4.0 * e / k * st.sigma_c;
    m.n_bar = mean_photon_number(params).n_bar;
    return m;
}

QuadratureVariances variances_from_moments(const SystemParams& params) {
    const AtomicSteadyState st = atomic_steady_state(params);
    const PhotonReport photons = mean_photon_number(params);
    const double k = params.kappa;
    const double gc = params.gamma_c;
    const double coherent = 4.0 * params.epsilon * params.epsilon / (k * gc);
    const double absorbed = 4.0 * params.epsilon / k * st.sigma_c;

    // Steady state is real, so <b^dag> = <b> and <b^dag 2> = <b^2>.
    const double n = photons.drive_term - photons.absorbed_term + photons.emitted_term;
    const double anti_n = coherent - absorbed + gc / k * st.eta_c;
    const double b_sq = coherent - absorbed;
    const double mean_b = 2.0 / k * (params.eta - params.g * st.sigma_c);
    const double mean_b_sq = mean_b * mean_b;

    QuadratureVariances v;
    v.var_plus = n + anti_n + 2.0 * b_sq - 2.0 * mean_b_sq - 2.0 * mean_b_sq;
    v.var_minus = n + anti_n - 2.0 * b_sq + 2.0 * mean_b_sq - 2.0 * mean_b_sq;
    return v;
}

}  // namespace cascade
