#include "cascade/superposed.hpp"

namespace cascade {

namespace {

// The primed system is a copy of the unprimed one.
struct Pair {
    AtomicSteadyState unprimed;
    AtomicSteadyState primed;
};

Pair steady_pair(const SystemParams& params) {
    return {atomic_steady_state(params), atomic_steady_state(params)};
}

}  // namespace

SuperposedUncertainty superposed_uncertainty(const SystemParams& params) {
    validate(params);
    const double s2 = params.total_decay() * params.total_decay();
    const double e2 = params.epsilon * params.epsilon;
    const double denom = 3.0 * e2 + s2;
    const double vac = params.vacuum_level();

    SuperposedUncertainty u;
    u.f_lower = vac * (2.0 * s2 / denom);
    u.f_product = 2.0 * vac * (1.0 - (3.0 * e2 * e2 + 3.0 * e2 * s2) / (denom * denom));
    return u;
}

double superposed_variance_from_populations(const SystemParams& params) {
    const Pair p = steady_pair(params);
    const double vac = params.vacuum_level();
    return vac * (p.unprimed.eta_a + p.primed.eta_a + p.unprimed.eta_c + p.primed.eta_c) -
           2.0 * vac * (p.unprimed.sigma_c * p.unprimed.sigma_c + p.primed.sigma_c * p.primed.sigma_c);
}

SuperposedReport superposed_report(const SystemParams& params) {
    const Pair p = steady_pair(params);
    const double k = params.kappa;
    const double s2 = params.total_decay() * params.total_decay();
    const double e2 = params.epsilon * params.epsilon;
    const double denom = 3.0 * e2 + s2;

    SuperposedReport r;
    r.n_s = 8.0 * params.eta * params.eta / (k * k) -
            8.0 * params.eta * params.g / (k * k) * (p.unprimed.sigma_c + p.primed.sigma_c) +
            params.vacuum_level() * (p.unprimed.eta_a + p.primed.eta_a);

    r.vacuum_level = 2.0 * params.vacuum_level();
    // Both quadratures share one expression.
    const double variance = r.vacuum_level * (1.0 - (3.0 * e2 * e2 + 3.0 * e2 * s2) / (denom * denom));
    r.var_plus = variance;
    r.var_minus = variance;

    const SuperposedUncertainty u = superposed_uncertainty(params);
    r.f_lower = u.f_lower;
    r.f_product = u.f_product;

    const double squeezing = 1.0 - (6.0 * e2 * e2 + s2 * (3.0 * e2 + s2)) / (denom * denom);
    r.s_sup_plus = squeezing;
    r.s_sup_minus = squeezing;
    return r;
}

}  // namespace cascade
