#pragma once

#include <cstdint>
#include <vector>

#include "lfpp/balls.hpp"
#include "lfpp/metric_graph.hpp"

namespace lfpp {

enum class TargetMode { all_boundary, sample };

/// One annulus-crossing coalescence measurement: how many distinct vertices of
/// the inner filled-ball boundary are hit first (walking center -> target)
/// by tree geodesics ending on the outer filled-ball boundary.
struct ConfluenceEntry {
    double s = 0.0;
    double t = 0.0;
    int target_count = 0;
    std::vector<int> targets;    // local ids used as targets
    std::vector<int> ancestors;  // distinct first crossings of the inner boundary, ascending
};

/// Requires 0 < s < t, a single-source DistanceField, and the filled ball at t
/// inside the window. TargetMode::sample picks m distinct boundary targets
/// with the given seed; all_boundary uses the full outer boundary.
ConfluenceEntry confluence_statistic(const DistanceField& dfield, double s, double t,
                                     TargetMode mode, int sample_m = 0,
                                     std::uint64_t sample_seed = 0);

}  // namespace lfpp
