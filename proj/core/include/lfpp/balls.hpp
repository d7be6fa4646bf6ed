#pragma once

#include <cstdint>
#include <vector>

#include "lfpp/metric_graph.hpp"

namespace lfpp {

/// Closed metric ball at graph level: local ids of vertices with dist <= s.
std::vector<int> metric_ball(const DistanceField& dfield, double s);
std::vector<std::uint8_t> metric_ball_mask(const DistanceField& dfield, double s);

/// Metric ball plus every complementary component (under the graph stencil)
/// that does not reach the window boundary; the window edge stands in for
/// infinity.
struct FilledBall {
    Vertex center;
    double radius = 0.0;
    std::vector<std::uint8_t> mask;  // per local id
    std::vector<int> vertices;       // ids in the fill, ascending
    std::vector<int> boundary;       // fill ids with a stencil neighbor outside the fill
};

/// Requires a single-source DistanceField whose ball at s stays strictly off
/// the window edge (otherwise the fill is ill-defined); throws on contact.
FilledBall filled_metric_ball(const DistanceField& dfield, double s);

/// Smallest distance at which the ball exits the Euclidean r-neighbourhood of
/// the (single) source: min dist over vertices within half a spacing of the
/// circle of radius r. Throws if the circle leaves the window.
double hitting_radius(const DistanceField& dfield, double r);

}  // namespace lfpp
