#include "lfpp/balls.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace lfpp {

std::vector<std::uint8_t> metric_ball_mask(const DistanceField& dfield, double s) {
    if (s < 0.0) throw std::invalid_argument("metric_ball: radius must be >= 0");
    std::vector<std::uint8_t> mask(dfield.dist.size(), 0);
    for (std::size_t i = 0; i < dfield.dist.size(); ++i) mask[i] = dfield.dist[i] <= s ? 1 : 0;
    return mask;
}

std::vector<int> metric_ball(const DistanceField& dfield, double s) {
    std::vector<std::uint8_t> mask = metric_ball_mask(dfield, s);
    std::vector<int> ids;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) ids.push_back(static_cast<int>(i));
    }
    return ids;
}

FilledBall filled_metric_ball(const DistanceField& dfield, double s) {
    const MetricGraph& g = *dfield.graph;
    if (dfield.sources.size() != 1) {
        throw std::invalid_argument("filled_metric_ball: needs a single-source distance field");
    }
    const int w = g.width();
    const int h = g.height();
    const int nv = g.vertex_count();

    FilledBall fb;
    fb.center = g.vertex_of(dfield.sources[0]);
    fb.radius = s;
    fb.mask = metric_ball_mask(dfield, s);

    for (int id = 0; id < nv; ++id) {
        if (fb.mask[id] && g.box.on_edge(g.vertex_of(id).ix, g.vertex_of(id).iy)) {
            throw std::invalid_argument("filled_metric_ball: ball touches the window boundary");
        }
    }

    // Flood the complement from the window edge; unreached complement
    // components are enclosed pockets and get absorbed into the fill.
    std::vector<std::uint8_t> open(nv, 0);  // complement vertices reaching the edge
    std::queue<int> bfs;
    for (int id = 0; id < nv; ++id) {
        Vertex v = g.vertex_of(id);
        if (!fb.mask[id] && g.box.on_edge(v.ix, v.iy)) {
            open[id] = 1;
            bfs.push(id);
        }
    }
    const int noff = static_cast<int>(g.off_dx.size());
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        int ux = u % w;
        int uy = u / w;
        for (int o = 0; o < noff; ++o) {
            int vx = ux + g.off_dx[o];
            int vy = uy + g.off_dy[o];
            if (vx < 0 || vx >= w || vy < 0 || vy >= h) continue;
            int v = vy * w + vx;
            if (!fb.mask[v] && !open[v]) {
                open[v] = 1;
                bfs.push(v);
            }
        }
    }
    for (int id = 0; id < nv; ++id) {
        if (!fb.mask[id] && !open[id]) fb.mask[id] = 1;
    }

    for (int id = 0; id < nv; ++id) {
        if (!fb.mask[id]) continue;
        fb.vertices.push_back(id);
        int ux = id % w;
        int uy = id / w;
        bool edge = false;
        for (int o = 0; o < noff && !edge; ++o) {
            int vx = ux + g.off_dx[o];
            int vy = uy + g.off_dy[o];
            if (vx < 0 || vx >= w || vy < 0 || vy >= h) continue;
            if (!fb.mask[vy * w + vx]) edge = true;
        }
        if (edge) fb.boundary.push_back(id);
    }
    return fb;
}

double hitting_radius(const DistanceField& dfield, double r) {
    const MetricGraph& g = *dfield.graph;
    if (dfield.sources.size() != 1) {
        throw std::invalid_argument("hitting_radius: needs a single-source distance field");
    }
    if (!(r > 0.0)) throw std::invalid_argument("hitting_radius: r must be positive");
    const double a = g.spec.spacing();
    Vertex c = g.vertex_of(dfield.sources[0]);
    const double cx = c.ix * a;
    const double cy = c.iy * a;
    const Rect& win = g.spec.window;
    const double tol = 1e-12 * g.spec.side_length;
    if (cx - r < win.x0 - tol || cx + r > win.x1 + tol || cy - r < win.y0 - tol ||
        cy + r > win.y1 + tol) {
        throw std::invalid_argument("hitting_radius: circle exits the window");
    }

    double best = kUnreachable;
    // scan the annulus |rho - r| <= a/2 only
    int irad_lo = static_cast<int>(std::floor((r - a) / a));
    for (int id = 0; id < g.vertex_count(); ++id) {
        Vertex v = g.vertex_of(id);
        double dx = v.ix * a - cx;
        double dy = v.iy * a - cy;
        double rho2 = dx * dx + dy * dy;
        if (rho2 < 1.0 * irad_lo * irad_lo * a * a) continue;
        double rho = std::sqrt(rho2);
        if (std::abs(rho - r) <= 0.5 * a && dfield.dist[id] < best) best = dfield.dist[id];
    }
    if (best == kUnreachable) {
        throw std::runtime_error("hitting_radius: no reachable vertex near the circle");
    }
    return best;
}

}  // namespace lfpp
