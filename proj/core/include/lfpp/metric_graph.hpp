#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "lfpp/grid.hpp"
#include "lfpp/mollify.hpp"

namespace lfpp {

enum class Stencil { four, eight, sixteen };

/// Global grid vertex (ix, iy); physical position (ix*spacing, iy*spacing).
struct Vertex {
    int ix = 0;
    int iy = 0;
    bool operator==(const Vertex&) const = default;
};

/// Weighted implicit lattice graph over the measurement window. Vertex weights
/// are exp(xi * h(v)); an edge (u,v) along stencil offset delta costs
/// stretched_length(delta) * (w(u)+w(v))/2 with
/// stretched_length(delta) = spacing * sqrt(dx^2 + A*dy^2).
/// Torus edges crossing the window boundary are excluded.
struct MetricGraph {
    GridSpec spec;
    IndexBox box;
    double xi = 0.0;
    Stencil stencil = Stencil::eight;
    double anisotropy = 1.0;
    std::vector<double> field;   // window-restricted field values, row-major in box
    std::vector<double> weight;  // exp(xi * field)

    // stencil offsets and their stretched physical lengths
    std::vector<int> off_dx, off_dy;
    std::vector<double> off_len;

    int width() const { return box.width(); }
    int height() const { return box.height(); }
    int vertex_count() const { return box.width() * box.height(); }

    int local_id(Vertex v) const {
        return (v.iy - box.iy0) * box.width() + (v.ix - box.ix0);
    }
    Vertex vertex_of(int id) const {
        return Vertex{box.ix0 + id % box.width(), box.iy0 + id / box.width()};
    }
    bool in_window(Vertex v) const { return box.contains(v.ix, v.iy); }

    double px(int id) const { return vertex_of(id).ix * spec.spacing(); }
    double py(int id) const { return vertex_of(id).iy * spec.spacing(); }
};

MetricGraph build_graph(const MollifiedField& mollified, double xi, Stencil stencil,
                        double anisotropy_a);

/// Graph over the same window with field values field[v] + f[v] (f indexed by
/// local id). Identical to rebuilding from the shifted field.
MetricGraph weyl_shift(const MetricGraph& graph, const std::vector<double>& f);
MetricGraph weyl_shift(const MetricGraph& graph, const std::function<double(Vertex)>& f);

constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Shortest-path distances and predecessor forest from a source set.
/// Ties are broken toward the smallest local vertex index, both in the heap
/// order and in predecessor selection, so the tree is reproducible.
struct DistanceField {
    const MetricGraph* graph = nullptr;
    std::vector<int> sources;        // local ids
    std::vector<double> dist;        // per local id; kUnreachable if not reached
    std::vector<std::int32_t> pred;  // local id or -1
};

DistanceField distance_field(const MetricGraph& graph, const std::vector<Vertex>& sources);
DistanceField distance_field_local(const MetricGraph& graph, const std::vector<int>& sources);

/// Restricted variant: only vertices with region[id] != 0 participate.
DistanceField distance_field_masked(const MetricGraph& graph, const std::vector<int>& sources,
                                    const std::vector<std::uint8_t>& region);

double point_distance(const MetricGraph& graph, Vertex u, Vertex v);

/// Shortest path confined to `region`; kUnreachable if disconnected within it.
/// Throws if an endpoint violates the predicate.
double internal_distance(const MetricGraph& graph, Vertex u, Vertex v,
                         const std::function<bool(Vertex)>& region);
double internal_distance_masked(const MetricGraph& graph, Vertex u, Vertex v,
                                const std::vector<std::uint8_t>& region);

struct Geodesic {
    std::vector<Vertex> vertices;  // source first, target last
    double length = 0.0;
};

/// Follows predecessors from target back to a source. Throws on unreachable
/// targets. length equals dist(target) exactly.
Geodesic trace_geodesic(const DistanceField& dfield, Vertex target);

/// Edge cost between adjacent vertices (by local ids and stencil offset index).
double edge_cost(const MetricGraph& graph, int u, int v, int offset_index);

}  // namespace lfpp
