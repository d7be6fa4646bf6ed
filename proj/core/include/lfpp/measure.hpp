#pragma once

#include <cstdint>
#include <vector>

#include "lfpp/grid.hpp"
#include "lfpp/metric_graph.hpp"
#include "lfpp/mollify.hpp"
#include "lfpp/params.hpp"

namespace lfpp {

/// Area-measure approximant eps^(gamma^2/2) * sum_{v in region} exp(gamma h*_eps(v)) * spacing^2.
/// The region is an inclusive vertex-index box inside the window.
double gmc_mass(const MollifiedField& mollified, double gamma, const IndexBox& region);

/// Same over an arbitrary window mask (local ids of a graph over the window).
double gmc_mass_masked(const MollifiedField& mollified, double gamma,
                       const std::vector<std::uint8_t>& mask, const IndexBox& window);

/// Expectation-normalizing multiplier exp(-(gamma^2/2) (Var h*_eps - log(1/eps))):
/// corrected masses have eps-independent expectation, so Monte Carlo means can
/// be compared across scales against a deterministic spectral oracle.
double gmc_expectation_correction(const GridSpec& spec, double gamma, double eps);

struct CoordinateCheck {
    double mass_direct = 0.0;    // mass of r*region under the field, mollified at eps
    double mass_rescaled = 0.0;  // mass of region under the rescaled field + Q log r,
                                 // sampled on the r-subsampled torus, mollified at eps/r
};

/// Scaling-covariance probe for r in {1/2, 1/4}: compares the measure of the
/// shrunk region with the measure computed in rescaled coordinates. The two
/// agree in the continuum; the lattice discrepancy shrinks as eps/spacing grows.
CoordinateCheck gmc_coordinate_check(const FieldSample& field, double gamma, double r,
                                     const Rect& region, double eps);

struct DimensionPoint {
    double s = 0.0;     // metric radius actually used (tau at the Euclidean anchor)
    double mass = 0.0;  // measure of the filled metric ball
};

struct DimensionReplica {
    std::uint64_t seed = 0;
    std::vector<DimensionPoint> points;
    double slope = 0.0;  // log mass vs log s
};

struct DimensionReport {
    double gamma = 0.0;
    double eps = 0.0;
    std::vector<DimensionReplica> replicas;
    double mean_slope = 0.0;
};

/// Ball-volume scaling estimate: per replica, grow filled metric balls whose
/// radii are the hitting radii of a Euclidean anchor ladder (>= 4 anchors, all
/// inside the window), measure them, and fit log mass against log radius.
DimensionReport ball_volume_dimension(const Parameters& params, const GridSpec& grid, double eps,
                                      const std::vector<double>& euclid_ladder, int replicas,
                                      std::uint64_t seed0, int workers);

}  // namespace lfpp
