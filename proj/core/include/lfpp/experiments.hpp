#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfpp/metric_graph.hpp"
#include "lfpp/params.hpp"
#include "lfpp/stats.hpp"

namespace lfpp {

/// Crossing experiments measure the shortest-path distance between opposite
/// sides of a grid-aligned square under the exponentiated mollified field,
/// with the field's additive constant fixed by a zero circle average of unit
/// radius at the window center.

struct CrossingLevel {
    double eps = 0.0;
    std::vector<std::uint64_t> seeds;  // per replica, disjoint across levels
    std::vector<double> crossings;     // per replica, seed order
    double median_crossing = 0.0;
    double ci_lo = 0.0, ci_hi = 0.0;   // percentile bootstrap on the median
};

struct CrossingReport {
    Parameters params;
    GridSpec grid;
    Rect square;
    std::vector<CrossingLevel> levels;
};

/// Distance across `square` on a prebuilt graph (left->right, or bottom->top
/// when vertical). Exposed separately so tests can inject constructed fields.
double crossing_on_graph(const MetricGraph& graph, const Rect& square, bool vertical);

/// Centered square of the given physical side inside the window.
Rect centered_square(const GridSpec& grid, double side);

/// One ladder level of the crossing-median experiment: `replicas` independent
/// fields, each sampled, mollified at eps, exponentiated, crossed. Seeds are
/// task_seed(seed0, name + "/eps=<eps>", replica).
CrossingLevel crossing_median(const Parameters& params, const GridSpec& grid, double eps,
                              int replicas, std::uint64_t seed0, int workers,
                              const std::string& name = "crossings", Stencil stencil = Stencil::eight);

struct FitReport {
    double slope = 0.0;
    double intercept = 0.0;
    double ci_lo = 0.0, ci_hi = 0.0;  // bootstrap CI on the slope
    int points = 0;
};

/// OLS slope of log(median crossing) vs log(eps); bootstrap resamples replicas
/// within each level. Requires >= 4 levels.
FitReport fit_exponent(const std::vector<CrossingLevel>& levels, int bootstrap_resamples,
                       std::uint64_t seed);
/// Raw-points variant (no bootstrap), for synthetic data.
FitReport fit_points(const std::vector<double>& log_eps, const std::vector<double>& log_median);

struct BiLipPair {
    int pair_id = 0;
    double sep = 0.0;
    double da = 0.0, db = 0.0;
    double ratio = 0.0;  // db / da
};

struct BiLipReport {
    double beta = 0.0;
    double min_ratio = 0.0;  // empirical lower bi-Lipschitz constant
    double max_ratio = 0.0;  // empirical upper bi-Lipschitz constant
    std::vector<BiLipPair> pairs;
};

/// Ratios D_b/D_a over uniformly sampled vertex pairs with Euclidean
/// separation >= beta * (shorter window side). Graphs must share the window.
BiLipReport bilipschitz_estimate(const MetricGraph& graph_a, const MetricGraph& graph_b,
                                 double beta, int pairs, std::uint64_t seed);

struct TightnessReport {
    double r1 = 0.0, r2 = 0.0;
    std::vector<std::uint64_t> seeds;
    std::vector<double> normalized1, normalized2;  // per replica, seed order
    double ks = 0.0;
};

/// Distance between the pair center + r*(-1/4, 0), center + r*(1/4, 0),
/// mollified at eps = r/8, normalized by r^(xi q) * exp(xi * h_r(center)) with
/// h_r the circle average of the unmollified field. Same seeds feed both
/// scales; returns the two-sample KS statistic between the normalized laws.
TightnessReport tightness_compare(const Parameters& params, const GridSpec& grid, double r1,
                                  double r2, int replicas, std::uint64_t seed0, int workers);

double tightness_normalize(const Parameters& params, double distance, double r, double h_r);

struct RotationLevel {
    double eps = 0.0;
    double ratio = 0.0;  // median vertical / median horizontal crossing
    double ci_lo = 0.0, ci_hi = 0.0, se = 0.0;
    std::vector<double> horizontal, vertical;  // per replica crossings
};

/// Per-eps anisotropy ratio under the stretched metric. The same replica
/// seeds are reused across eps levels so level differences are paired.
std::vector<RotationLevel> rotation_anisotropy(const Parameters& params, const GridSpec& grid,
                                               double anisotropy_a,
                                               const std::vector<double>& eps_list, int replicas,
                                               std::uint64_t seed0, int workers);

struct HolderPair {
    double sep = 0.0;
    double d1 = 0.0, d2 = 0.0;  // distance at sep and at exactly doubled offset
    double slope = 0.0;         // log2(d2/d1)
    bool in_band = false;
};

struct HolderReport {
    double chi_lo = 0.0;   // 0.9 * xi (q - 2)
    double chi_hi = 0.0;   // 1.1 * xi (q + 2)
    int bins = 0;
    std::vector<HolderPair> pairs;          // all pairs, bin-major order
    std::vector<double> bin_fraction;       // in-band fraction per bin
    double fraction_in_band = 0.0;
};

/// Doubling-pair local exponents across log-spaced separation bins spanning
/// [4*spacing, max separation the window allows]. Each pair compares the
/// distance to an integer offset and to exactly twice that offset.
HolderReport holder_scan(const MetricGraph& graph, const Parameters& params, int pairs_per_bin,
                         int bins, std::uint64_t seed);

}  // namespace lfpp
