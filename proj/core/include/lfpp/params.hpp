#pragma once

namespace lfpp {

/// Coupling constants of the exponentiated-field metric, with the derived
/// exponents cached. xi = gamma/d and q = 2/gamma + gamma/2 hold exactly as
/// stored; construction rejects xi*q > 1.
struct Parameters {
    double gamma = 0.0;               // field coupling, in (0,2)
    double d = 0.0;                   // candidate metric dimension, > 2
    double xi = 0.0;                  // gamma / d
    double q = 0.0;                   // 2/gamma + gamma/2
    double exponent_one_minus_xiq = 0.0;
};

/// Validate (gamma, d) and populate the derived exponents.
/// Throws std::domain_error on out-of-range inputs and std::invalid_argument
/// when xi*q exceeds 1 (the exponent fits downstream assume 1 - xi*q >= 0).
Parameters derive_params(double gamma, double d);

/// Closed-form candidate dimension 1 + gamma^2/4 + sqrt((4+gamma^2)^2 + 16 gamma^2)/4.
/// Equals 4 exactly at gamma = sqrt(8/3) and tends to 2 as gamma -> 0.
double watabiki_dimension(double gamma);

}  // namespace lfpp
