#pragma once

#include <cstdint>
#include <vector>

namespace lfpp {

double mean(const std::vector<double>& v);
double sample_variance(const std::vector<double>& v);
double median(std::vector<double> v);

/// Linear-interpolated percentile of a sorted vector, p in [0,1].
double percentile_sorted(const std::vector<double>& sorted, double p);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};
/// Ordinary least squares; throws on degenerate design (all x equal).
LineFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

struct BootstrapCi {
    double lo = 0.0;
    double hi = 0.0;
    double se = 0.0;
};
/// Percentile bootstrap CI (2.5/97.5) for the median, with bootstrap SE.
BootstrapCi bootstrap_median_ci(const std::vector<double>& v, int resamples, std::uint64_t seed);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_statistic(std::vector<double> a, std::vector<double> b);

}  // namespace lfpp
