#pragma once

#include "cascade/model.hpp"

namespace cascade {

/// Statistics of c = a + i b, where a and b are the driven modes of two
/// independent, identically parameterized atom-cavity systems.
struct SuperposedReport {
    double n_s = 0.0;
    double var_plus = 0.0;
    double var_minus = 0.0;
    double vacuum_level = 0.0;  // 2 gamma_c / kappa
    double f_lower = 0.0;       // f_c(eps)
    double f_product = 0.0;     // f_d(eps)
    double s_sup_plus = 0.0;
    double s_sup_minus = 0.0;
};

struct SuperposedUncertainty {
    double f_lower = 0.0;
    double f_product = 0.0;
};

SuperposedReport superposed_report(const SystemParams& params);

SuperposedUncertainty superposed_uncertainty(const SystemParams& params);

/// Quadrature variance built from the two subsystems' steady-state
/// populations and coherences rather than the closed form in epsilon.
double superposed_variance_from_populations(const SystemParams& params);

}  // namespace cascade
