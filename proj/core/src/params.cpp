#include "lfpp/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lfpp {

Parameters derive_params(double gamma, double d) {
    if (!(gamma > 0.0) || !(gamma < 2.0)) {
        throw std::domain_error("derive_params: gamma must lie in (0,2), got " +
                                std::to_string(gamma));
    }
    if (!(d > 2.0)) {
        throw std::domain_error("derive_params: d must exceed 2, got " + std::to_string(d));
    }
    Parameters p;
    p.gamma = gamma;
    p.d = d;
    p.xi = gamma / d;
    p.q = 2.0 / gamma + gamma / 2.0;
    double xiq = p.xi * p.q;
    if (xiq > 1.0) {
        throw std::invalid_argument("derive_params: xi*q = " + std::to_string(xiq) +
                                    " exceeds 1; choose a larger d");
    }
    p.exponent_one_minus_xiq = 1.0 - xiq;
    return p;
}

double watabiki_dimension(double gamma) {
    if (!(gamma > 0.0) || !(gamma < 2.0)) {
        throw std::domain_error("watabiki_dimension: gamma must lie in (0,2), got " +
                                std::to_string(gamma));
    }
    double g2 = gamma * gamma;
    return 1.0 + g2 / 4.0 + 0.25 * std::sqrt((4.0 + g2) * (4.0 + g2) + 16.0 * g2);
}

}  // namespace lfpp
