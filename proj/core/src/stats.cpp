#include "lfpp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lfpp/rng.hpp"

namespace lfpp {

double mean(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("mean: empty sample");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v) {
    if (v.size() < 2) throw std::invalid_argument("sample_variance: need at least 2 values");
    double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median: empty sample");
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double percentile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("percentile: empty sample");
    if (p <= 0.0) return sorted.front();
    if (p >= 1.0) return sorted.back();
    double pos = p * static_cast<double>(sorted.size() - 1);
    std::size_t i = static_cast<std::size_t>(pos);
    double frac = pos - static_cast<double>(i);
    if (i + 1 >= sorted.size()) return sorted.back();
    return sorted[i] * (1.0 - frac) + sorted[i + 1] * frac;
}

LineFit ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("ols_fit: need matching x/y with >= 2 points");
    }
    double mx = mean(x);
    double my = mean(y);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("ols_fit: degenerate design, all x equal");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    return f;
}

BootstrapCi bootstrap_median_ci(const std::vector<double>& v, int resamples, std::uint64_t seed) {
    if (v.empty()) throw std::invalid_argument("bootstrap_median_ci: empty sample");
    if (resamples < 2) throw std::invalid_argument("bootstrap_median_ci: need >= 2 resamples");
    CounterRng rng(seed, 0x626f6f74ULL);
    std::vector<double> medians(resamples);
    std::vector<double> draw(v.size());
    for (int b = 0; b < resamples; ++b) {
        for (std::size_t i = 0; i < v.size(); ++i) draw[i] = v[rng.next_u64() % v.size()];
        medians[b] = median(draw);
    }
    std::sort(medians.begin(), medians.end());
    BootstrapCi ci;
    ci.lo = percentile_sorted(medians, 0.025);
    ci.hi = percentile_sorted(medians, 0.975);
    double m = mean(medians);
    double s = 0.0;
    for (double x : medians) s += (x - m) * (x - m);
    ci.se = std::sqrt(s / static_cast<double>(medians.size() - 1));
    return ci;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        double fa = static_cast<double>(i) / static_cast<double>(a.size());
        double fb = static_cast<double>(j) / static_cast<double>(b.size());
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

}  // namespace lfpp
