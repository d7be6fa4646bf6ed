#include "lfpp/field.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>

#include "lfpp/fft.hpp"
#include "lfpp/rng.hpp"

namespace lfpp {

namespace {

// Discrete Laplacian symbol 4 - 2cos(2pi k1/n) - 2cos(2pi k2/n) via a cos table.
std::vector<double> cos_table(int n) {
    std::vector<double> t(n);
    for (int k = 0; k < n; ++k) t[k] = std::cos(2.0 * M_PI * k / n);
    return t;
}

// Covariance at axis lag m for the uncalibrated spectrum 1/(n^2 lambda(k)).
double unit_axis_covariance(int n, int lag) {
    std::vector<double> ct = cos_table(n);
    const double inv_n2 = 1.0 / (static_cast<double>(n) * n);
    double sum = 0.0;
    for (int k1 = 0; k1 < n; ++k1) {
        double c_lag = std::cos(2.0 * M_PI * static_cast<double>(k1) * lag / n);
        for (int k2 = 0; k2 < n; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            double lam = 4.0 - 2.0 * ct[k1] - 2.0 * ct[k2];
            sum += inv_n2 / lam * c_lag;
        }
    }
    return sum;
}

int wrap_freq(int k, int n) { return (k <= n / 2) ? k : k - n; }

}  // namespace

double covariance_calibration(int n) {
    static std::mutex mtx;
    static std::map<int, double> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    int m1 = std::max(1, n / 16);
    int m2 = 2 * m1;
    double c1 = unit_axis_covariance(n, m1);
    double c2 = unit_axis_covariance(n, m2);
    double kappa = std::log(2.0) / (c1 - c2);
    cache.emplace(n, kappa);
    return kappa;
}

double spectral_axis_covariance(const GridSpec& spec, int lag) {
    spec.validate();
    return covariance_calibration(spec.n) * unit_axis_covariance(spec.n, lag);
}

double spectral_point_variance(const GridSpec& spec, double eps) {
    spec.validate();
    if (eps < 0.0) throw std::invalid_argument("spectral_point_variance: eps must be >= 0");
    const int n = spec.n;
    const double kappa = covariance_calibration(n);
    const double inv_n2 = 1.0 / (static_cast<double>(n) * n);
    std::vector<double> ct = cos_table(n);

    // exp(-eps^2 |omega|^2 / 2) factors per axis frequency
    std::vector<double> damp(n, 1.0);
    if (eps > 0.0) {
        const double w0 = 2.0 * M_PI / spec.side_length;
        for (int k = 0; k < n; ++k) {
            double w = w0 * wrap_freq(k, n);
            damp[k] = std::exp(-0.5 * eps * eps * w * w);
        }
    }

    double sum = 0.0;
    for (int k1 = 0; k1 < n; ++k1) {
        for (int k2 = 0; k2 < n; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            double lam = 4.0 - 2.0 * ct[k1] - 2.0 * ct[k2];
            sum += kappa * inv_n2 / lam * damp[k1] * damp[k2];
        }
    }
    return sum;
}

double bilinear_periodic(const GridSpec& spec, const std::vector<double>& values, double x,
                         double y) {
    const int n = spec.n;
    const double a = spec.spacing();
    double fx = x / a;
    double fy = y / a;
    double flx = std::floor(fx);
    double fly = std::floor(fy);
    double tx = fx - flx;
    double ty = fy - fly;
    long lx = static_cast<long>(flx);
    long ly = static_cast<long>(fly);
    int ix0 = static_cast<int>(((lx % n) + n) % n);
    int iy0 = static_cast<int>(((ly % n) + n) % n);
    int ix1 = (ix0 + 1) % n;
    int iy1 = (iy0 + 1) % n;
    auto v = [&](int ix, int iy) { return values[static_cast<std::size_t>(iy) * n + ix]; };
    return (1.0 - tx) * (1.0 - ty) * v(ix0, iy0) + tx * (1.0 - ty) * v(ix1, iy0) +
           (1.0 - tx) * ty * v(ix0, iy1) + tx * ty * v(ix1, iy1);
}

double torus_circle_average(const GridSpec& spec, const std::vector<double>& values, double cx,
                            double cy, double radius) {
    const double a = spec.spacing();
    int m = std::max(64, static_cast<int>(std::ceil(2.0 * M_PI * radius / a)));
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
        double t = 2.0 * M_PI * j / m;
        sum += bilinear_periodic(spec, values, cx + radius * std::cos(t),
                                 cy + radius * std::sin(t));
    }
    return sum / m;
}

double circle_average(const FieldSample& field, double cx, double cy, double radius) {
    const GridSpec& spec = field.spec;
    const double a = spec.spacing();
    if (radius < 4.0 * a) {
        throw std::invalid_argument("circle_average: radius must be >= 4*spacing");
    }
    const Rect& w = spec.window;
    const double tol = 1e-12 * spec.side_length;
    if (cx - radius < w.x0 - tol || cx + radius > w.x1 + tol || cy - radius < w.y0 - tol ||
        cy + radius > w.y1 + tol) {
        throw std::invalid_argument("circle_average: circle exits the window");
    }
    return torus_circle_average(spec, field.values, cx, cy, radius);
}

FieldSample sample_field(const GridSpec& spec, std::uint64_t seed, const Normalization& norm) {
    spec.validate();
    const int n = spec.n;
    const int half = n / 2 + 1;
    const double kappa = covariance_calibration(n);
    const double inv_n2 = 1.0 / (static_cast<double>(n) * n);
    std::vector<double> ct = cos_table(n);

    std::vector<std::complex<double>> spectrum(fft::complex_count(n));
    for (int k1 = 0; k1 < n; ++k1) {
        for (int k2 = 0; k2 <= n / 2; ++k2) {
            std::size_t slot = static_cast<std::size_t>(k1) * half + k2;
            if (k1 == 0 && k2 == 0) {
                spectrum[slot] = 0.0;  // additive constant is fixed by `norm`, not the spectrum
                continue;
            }
            double lam = 4.0 - 2.0 * ct[k1] - 2.0 * ct[k2];
            double s = kappa * inv_n2 / lam;

            int p1 = (n - k1) % n;
            int p2 = (n - k2) % n;
            std::uint64_t m_self = static_cast<std::uint64_t>(k1) * n + k2;
            std::uint64_t m_part = static_cast<std::uint64_t>(p1) * n + p2;
            if (m_self == m_part) {
                // self-conjugate mode: real coefficient
                CounterRng rng(seed, m_self);
                spectrum[slot] = rng.next_normal() * std::sqrt(s);
            } else {
                std::uint64_t canon = std::min(m_self, m_part);
                CounterRng rng(seed, canon);
                double re, im;
                rng.next_normal_pair(re, im);
                double amp = std::sqrt(0.5 * s);
                std::complex<double> c(amp * re, amp * im);
                spectrum[slot] = (m_self == canon) ? c : std::conj(c);
            }
        }
    }

    FieldSample f;
    f.spec = spec;
    f.seed = seed;
    f.norm = norm;
    f.values.resize(static_cast<std::size_t>(n) * n);
    fft::backward_c2r(n, spectrum.data(), f.values.data());

    if (norm.kind == NormKind::mean_zero) {
        double mean = 0.0;
        for (double v : f.values) mean += v;
        mean /= static_cast<double>(f.values.size());
        for (double& v : f.values) v -= mean;
    } else {
        double avg = torus_circle_average(spec, f.values, norm.cx, norm.cy, norm.radius);
        for (double& v : f.values) v -= avg;
    }
    return f;
}

}  // namespace lfpp
