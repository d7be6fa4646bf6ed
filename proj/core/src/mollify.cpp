#include "lfpp/mollify.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "lfpp/fft.hpp"

namespace lfpp {

std::vector<double> mollify_values(const GridSpec& spec, const std::vector<double>& values,
                                   double eps) {
    const int n = spec.n;
    const double a = spec.spacing();
    const double tol = 1e-12 * spec.side_length;
    if (eps < 2.0 * a - tol || eps > spec.side_length / 8.0 + tol) {
        throw std::out_of_range("mollify: eps = " + std::to_string(eps) +
                                " outside [2*spacing, side_length/8]");
    }
    const int half = n / 2 + 1;
    const double w0 = 2.0 * M_PI / spec.side_length;
    const double inv_n2 = 1.0 / (static_cast<double>(n) * n);

    std::vector<double> damp(n);
    for (int k = 0; k < n; ++k) {
        int kw = (k <= n / 2) ? k : k - n;
        double w = w0 * kw;
        damp[k] = std::exp(-0.25 * eps * eps * w * w);
    }

    std::vector<std::complex<double>> spectrum(fft::complex_count(n));
    fft::forward_r2c(n, values.data(), spectrum.data());
    for (int k1 = 0; k1 < n; ++k1) {
        for (int k2 = 0; k2 < half; ++k2) {
            spectrum[static_cast<std::size_t>(k1) * half + k2] *= damp[k1] * damp[k2] * inv_n2;
        }
    }
    std::vector<double> out(static_cast<std::size_t>(n) * n);
    fft::backward_c2r(n, spectrum.data(), out.data());
    return out;
}

MollifiedField mollify(const FieldSample& field, double eps) {
    MollifiedField m;
    m.spec = field.spec;
    m.seed = field.seed;
    m.eps = eps;
    m.values = mollify_values(field.spec, field.values, eps);
    return m;
}

}  // namespace lfpp
