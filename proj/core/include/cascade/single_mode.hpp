#pragma once

#include "cascade/model.hpp"

namespace cascade {

/// Steady-state mean photon number of the driven cavity mode b, split into
/// drive, absorption and emission contributions:
/// n_bar = drive_term - absorbed_term + emitted_term.
struct PhotonReport {
    double n_bar = 0.0;
    double drive_term = 0.0;     // 4 eta^2 / kappa^2
    double absorbed_term = 0.0;  // (8 eta g / kappa^2) <sigma_c>
    double emitted_term = 0.0;   // (gamma_c / kappa) <eta_a>
};

/// Quadrature statistics of mode b, with b_+ = b^dag + b and
/// b_- = i (b^dag - b). Variances are in the normally ordered convention
/// whose vacuum level is gamma_c / kappa.
struct QuadratureReport {
    double var_plus = 0.0;
    double var_minus = 0.0;
    double vacuum_level = 0.0;
    double f_lower = 0.0;    // uncertainty bound f_a(eps)
    double f_product = 0.0;  // Delta b_+ Delta b_- = f_b(eps)
    double s_plus = 0.0;     // 1 - var_plus / vacuum_level
    double s_minus = 0.0;    // 1 - var_minus / vacuum_level
};

/// Real steady-state moments of mode b.
struct FieldMoments {
    double mean_b = 0.0;          // <b>
    double mean_b_squared = 0.0;  // <b^2>
    double n_bar = 0.0;           // <b^dag b>
};

PhotonReport mean_photon_number(const SystemParams& params);

QuadratureReport quadrature_report(const SystemParams& params);

FieldMoments field_moments(const SystemParams& params);

struct QuadratureVariances {
    double var_plus = 0.0;
    double var_minus = 0.0;
};

/// Variances assembled term by term from the individual moments <b^dag b>,
/// <b b^dag>, <b^2>, <b>^2 and <b^dag><b>, with <b> taken from the
/// adiabatic field relation. Independent of the closed forms in
/// quadrature_report(); the two must agree.
QuadratureVariances variances_from_moments(const SystemParams& params);

}  // namespace cascade
