#include "lfpp/metric_graph.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

namespace lfpp {

namespace {

void stencil_offsets(Stencil s, std::vector<int>& dx, std::vector<int>& dy) {
    dx = {1, -1, 0, 0};
    dy = {0, 0, 1, -1};
    if (s == Stencil::four) return;
    int ddx[] = {1, 1, -1, -1};
    int ddy[] = {1, -1, 1, -1};
    dx.insert(dx.end(), ddx, ddx + 4);
    dy.insert(dy.end(), ddy, ddy + 4);
    if (s == Stencil::eight) return;
    int kdx[] = {1, 2, 2, 1, -1, -2, -2, -1};
    int kdy[] = {2, 1, -1, -2, -2, -1, 1, 2};
    dx.insert(dx.end(), kdx, kdx + 8);
    dy.insert(dy.end(), kdy, kdy + 8);
}

struct HeapEntry {
    double d;
    int v;
    bool operator>(const HeapEntry& o) const { return d > o.d || (d == o.d && v > o.v); }
};

using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>>;

// Single Dijkstra kernel shared by all public entry points. `region` may be
// empty (unrestricted); `stop_at` = -1 runs to exhaustion.
DistanceField run_dijkstra(const MetricGraph& g, const std::vector<int>& sources,
                           const std::vector<std::uint8_t>* region, int stop_at) {
    const int nv = g.vertex_count();
    const int w = g.width();
    const int h = g.height();
    DistanceField out;
    out.graph = &g;
    out.sources = sources;
    out.dist.assign(nv, kUnreachable);
    out.pred.assign(nv, -1);

    MinHeap heap;
    for (int s : sources) {
        if (s < 0 || s >= nv) throw std::invalid_argument("distance_field: source outside window");
        if (region && !(*region)[s]) {
            throw std::invalid_argument("distance_field: source violates region predicate");
        }
        out.dist[s] = 0.0;
        heap.push({0.0, s});
    }
    if (sources.empty()) throw std::invalid_argument("distance_field: empty source set");

    const int noff = static_cast<int>(g.off_dx.size());
    std::vector<std::uint8_t> done(nv, 0);
    while (!heap.empty()) {
        HeapEntry top = heap.top();
        heap.pop();
        int u = top.v;
        if (done[u]) continue;
        done[u] = 1;
        if (u == stop_at) break;
        int ux = u % w;
        int uy = u / w;
        double du = top.d;
        double wu = g.weight[u];
        for (int o = 0; o < noff; ++o) {
            int vx = ux + g.off_dx[o];
            int vy = uy + g.off_dy[o];
            if (vx < 0 || vx >= w || vy < 0 || vy >= h) continue;
            int v = vy * w + vx;
            if (region && !(*region)[v]) continue;
            double nd = du + g.off_len[o] * 0.5 * (wu + g.weight[v]);
            if (nd < out.dist[v]) {
                out.dist[v] = nd;
                out.pred[v] = u;
                heap.push({nd, v});
            } else if (nd == out.dist[v] && u < out.pred[v]) {
                out.pred[v] = u;
            }
        }
    }
    return out;
}

}  // namespace

MetricGraph build_graph(const MollifiedField& mollified, double xi, Stencil stencil,
                        double anisotropy_a) {
    if (!(xi > 0.0)) throw std::invalid_argument("build_graph: xi must be positive");
    if (!(anisotropy_a >= 1.0)) {
        throw std::invalid_argument("build_graph: anisotropy_a must be >= 1");
    }
    MetricGraph g;
    g.spec = mollified.spec;
    g.box = g.spec.window_box();
    g.xi = xi;
    g.stencil = stencil;
    g.anisotropy = anisotropy_a;
    stencil_offsets(stencil, g.off_dx, g.off_dy);
    const double a = g.spec.spacing();
    g.off_len.resize(g.off_dx.size());
    for (std::size_t o = 0; o < g.off_dx.size(); ++o) {
        double dx = g.off_dx[o];
        double dy = g.off_dy[o];
        g.off_len[o] = a * std::sqrt(dx * dx + anisotropy_a * dy * dy);
    }

    const int n = g.spec.n;
    g.field.resize(g.vertex_count());
    g.weight.resize(g.vertex_count());
    for (int iy = g.box.iy0; iy <= g.box.iy1; ++iy) {
        for (int ix = g.box.ix0; ix <= g.box.ix1; ++ix) {
            int id = (iy - g.box.iy0) * g.box.width() + (ix - g.box.ix0);
            double v = mollified.values[static_cast<std::size_t>(iy) * n + ix];
            g.field[id] = v;
            double wgt = std::exp(xi * v);
            if (!std::isfinite(wgt) || wgt <= 0.0) {
                throw std::runtime_error("build_graph: non-finite vertex weight at field value " +
                                         std::to_string(v));
            }
            g.weight[id] = wgt;
        }
    }
    return g;
}

MetricGraph weyl_shift(const MetricGraph& graph, const std::vector<double>& f) {
    if (f.size() != graph.field.size()) {
        throw std::invalid_argument("weyl_shift: f must have one value per window vertex");
    }
    MetricGraph g = graph;
    for (std::size_t i = 0; i < g.field.size(); ++i) {
        g.field[i] = graph.field[i] + f[i];
        double wgt = std::exp(g.xi * g.field[i]);
        if (!std::isfinite(wgt) || wgt <= 0.0) {
            throw std::runtime_error("weyl_shift: non-finite vertex weight");
        }
        g.weight[i] = wgt;
    }
    return g;
}

MetricGraph weyl_shift(const MetricGraph& graph, const std::function<double(Vertex)>& f) {
    std::vector<double> fv(graph.vertex_count());
    for (int id = 0; id < graph.vertex_count(); ++id) fv[id] = f(graph.vertex_of(id));
    return weyl_shift(graph, fv);
}

double edge_cost(const MetricGraph& g, int u, int v, int offset_index) {
    return g.off_len[offset_index] * 0.5 * (g.weight[u] + g.weight[v]);
}

DistanceField distance_field_local(const MetricGraph& graph, const std::vector<int>& sources) {
    return run_dijkstra(graph, sources, nullptr, -1);
}

DistanceField distance_field(const MetricGraph& graph, const std::vector<Vertex>& sources) {
    std::vector<int> ids;
    ids.reserve(sources.size());
    for (const Vertex& v : sources) {
        if (!graph.in_window(v)) throw std::invalid_argument("distance_field: source not in window");
        ids.push_back(graph.local_id(v));
    }
    return run_dijkstra(graph, ids, nullptr, -1);
}

DistanceField distance_field_masked(const MetricGraph& graph, const std::vector<int>& sources,
                                    const std::vector<std::uint8_t>& region) {
    return run_dijkstra(graph, sources, &region, -1);
}

double point_distance(const MetricGraph& graph, Vertex u, Vertex v) {
    if (!graph.in_window(u) || !graph.in_window(v)) {
        throw std::invalid_argument("point_distance: endpoint not in window");
    }
    int su = graph.local_id(u);
    int tv = graph.local_id(v);
    if (su == tv) return 0.0;
    DistanceField df = run_dijkstra(graph, {su}, nullptr, tv);
    return df.dist[tv];
}

double internal_distance_masked(const MetricGraph& graph, Vertex u, Vertex v,
                                const std::vector<std::uint8_t>& region) {
    if (!graph.in_window(u) || !graph.in_window(v)) {
        throw std::invalid_argument("internal_distance: endpoint not in window");
    }
    int su = graph.local_id(u);
    int tv = graph.local_id(v);
    if (!region[su] || !region[tv]) {
        throw std::invalid_argument("internal_distance: endpoint violates region predicate");
    }
    if (su == tv) return 0.0;
    DistanceField df = run_dijkstra(graph, {su}, &region, tv);
    return df.dist[tv];
}

double internal_distance(const MetricGraph& graph, Vertex u, Vertex v,
                         const std::function<bool(Vertex)>& region) {
    std::vector<std::uint8_t> mask(graph.vertex_count());
    for (int id = 0; id < graph.vertex_count(); ++id) {
        mask[id] = region(graph.vertex_of(id)) ? 1 : 0;
    }
    return internal_distance_masked(graph, u, v, mask);
}

Geodesic trace_geodesic(const DistanceField& dfield, Vertex target) {
    const MetricGraph& g = *dfield.graph;
    if (!g.in_window(target)) throw std::invalid_argument("trace_geodesic: target not in window");
    int t = g.local_id(target);
    if (dfield.dist[t] == kUnreachable) {
        throw std::runtime_error("trace_geodesic: target unreachable");
    }
    Geodesic geo;
    geo.length = dfield.dist[t];
    int cur = t;
    while (cur != -1) {
        geo.vertices.push_back(g.vertex_of(cur));
        cur = dfield.pred[cur];
    }
    std::reverse(geo.vertices.begin(), geo.vertices.end());
    return geo;
}

}  // namespace lfpp
