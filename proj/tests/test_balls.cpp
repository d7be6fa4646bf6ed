#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lfpp/balls.hpp"
#include "lfpp/metric_graph.hpp"
#include "lfpp/rng.hpp"
#include "oracles.hpp"

using namespace lfpp;

namespace {

GridSpec grid_with_box(int n, int bw, int bh, double side = 2.0) {
    GridSpec g;
    g.n = n;
    g.side_length = side;
    double a = side / n;
    int i0 = n / 4;
    g.window = Rect{i0 * a, i0 * a, (i0 + bw - 1) * a, (i0 + bh - 1) * a};
    g.validate();
    return g;
}

template <typename F>
MollifiedField make_field(const GridSpec& g, F&& fn) {
    MollifiedField m;
    m.spec = g;
    m.eps = 4 * g.spacing();
    m.values.assign(static_cast<std::size_t>(g.n) * g.n, 0.0);
    IndexBox b = g.window_box();
    for (int iy = b.iy0; iy <= b.iy1; ++iy) {
        for (int ix = b.ix0; ix <= b.ix1; ++ix) {
            m.values[static_cast<std::size_t>(iy) * g.n + ix] = fn(ix - b.ix0, iy - b.iy0);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("metric balls: degenerate radius, chamfer shape, nesting, growth") {
    GridSpec g = grid_with_box(64, 32, 32);
    double a = g.spacing();
    MollifiedField z = make_field(g, [](int, int) { return 0.0; });
    MetricGraph gr = build_graph(z, 0.4, Stencil::eight, 1.0);
    int cid = gr.local_id({gr.box.ix0 + 16, gr.box.iy0 + 16});
    DistanceField df = distance_field_local(gr, {cid});

    std::vector<int> b0 = metric_ball(df, 0.0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == cid);

    // chamfer ball: membership iff max+(sqrt2-1)min <= s/a
    double s = 6.5 * a;
    std::vector<std::uint8_t> mask = metric_ball_mask(df, s);
    for (int id = 0; id < gr.vertex_count(); ++id) {
        Vertex v = gr.vertex_of(id);
        double dx = std::abs(v.ix - (gr.box.ix0 + 16));
        double dy = std::abs(v.iy - (gr.box.iy0 + 16));
        double cham = (std::max(dx, dy) + (std::sqrt(2.0) - 1.0) * std::min(dx, dy)) * a;
        CHECK(mask[id] == (cham <= s + 1e-12 ? 1 : 0));
    }

    // nesting and nondecreasing counts over a growing radius sweep
    std::size_t prev_count = 0;
    std::vector<std::uint8_t> prev;
    for (double si : {0.0, 1.3 * a, 2.9 * a, 5.0 * a, 8.7 * a}) {
        std::vector<std::uint8_t> cur = metric_ball_mask(df, si);
        std::size_t count = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            count += cur[i];
            if (!prev.empty() && prev[i]) CHECK(cur[i] == 1);  // subset
        }
        CHECK(count >= prev_count);
        prev_count = count;
        prev = cur;
    }

    // right continuity over attained distances: ball at s equals ball at s + half-gap
    std::vector<double> ds = df.dist;
    std::sort(ds.begin(), ds.end());
    double s0 = ds[ds.size() / 3];
    double next_above = s0;
    for (double d : ds) {
        if (d > s0) {
            next_above = d;
            break;
        }
    }
    std::vector<std::uint8_t> at = metric_ball_mask(df, s0);
    std::vector<std::uint8_t> just_after = metric_ball_mask(df, 0.5 * (s0 + next_above));
    CHECK(at == just_after);
}

TEST_CASE("filled ball equals the plain ball when the complement is connected") {
    GridSpec g = grid_with_box(64, 32, 32);
    double a = g.spacing();
    MollifiedField z = make_field(g, [](int, int) { return 0.0; });
    MetricGraph gr = build_graph(z, 0.4, Stencil::eight, 1.0);
    int cid = gr.local_id({gr.box.ix0 + 16, gr.box.iy0 + 16});
    DistanceField df = distance_field_local(gr, {cid});
    double s = 7.2 * a;
    FilledBall fb = filled_metric_ball(df, s);
    CHECK(fb.mask == metric_ball_mask(df, s));
    CHECK(fb.center == gr.vertex_of(cid));

    // window contact rejected
    CHECK_THROWS_AS(filled_metric_ball(df, 16.5 * a), std::invalid_argument);
}

TEST_CASE("a high-cost moat pocket is absorbed into the filled ball") {
    GridSpec g = grid_with_box(128, 64, 64);
    double a = g.spacing();
    const double xi = 0.4;
    const int cx = 32, cy = 32;  // local center
    const int px = 44, py = 32;  // pocket center, 12 cells right

    MollifiedField f = make_field(g, [&](int ix, int iy) {
        double rho = std::hypot(ix - px, iy - py);
        if (rho <= 3.0) return 0.0;        // pocket interior
        if (rho <= 6.0) return 4.0 / xi;   // moat: weight e^4
        return 0.0;
    });
    MetricGraph gr = build_graph(f, xi, Stencil::eight, 1.0);
    DistanceField df = distance_field_local(gr, {gr.local_id({gr.box.ix0 + cx, gr.box.iy0 + cy})});

    double s = 26.0 * a;  // encloses the moat; pocket distances far exceed s
    int pocket_id = (py)*gr.width() + px;
    CHECK(df.dist[pocket_id] > s);

    FilledBall fb = filled_metric_ball(df, s);
    std::vector<std::uint8_t> ball = metric_ball_mask(df, s);
    CHECK(fb.mask[pocket_id] == 1);

    // filled ball contains the plain ball
    for (std::size_t i = 0; i < ball.size(); ++i) {
        if (ball[i]) CHECK(fb.mask[i] == 1);
    }

    // independent component-labeling oracle: complement components not
    // touching the window edge are exactly the absorbed vertices
    const int w = gr.width(), h = gr.height();
    std::vector<std::uint8_t> complement(ball.size());
    for (std::size_t i = 0; i < ball.size(); ++i) complement[i] = ball[i] ? 0 : 1;
    std::vector<int> label = oracles::label_components(complement, w, h, true);
    int ncomp = 0;
    for (int l : label) ncomp = std::max(ncomp, l + 1);
    std::vector<std::uint8_t> touches(ncomp, 0);
    for (int iy = 0; iy < h; ++iy) {
        for (int ix = 0; ix < w; ++ix) {
            if (label[iy * w + ix] >= 0 && (ix == 0 || ix == w - 1 || iy == 0 || iy == h - 1)) {
                touches[label[iy * w + ix]] = 1;
            }
        }
    }
    for (std::size_t i = 0; i < ball.size(); ++i) {
        bool expected_fill = ball[i] || (label[i] >= 0 && !touches[label[i]]);
        CHECK(fb.mask[i] == (expected_fill ? 1 : 0));
    }

    // boundary sanity: every boundary vertex is sphere-like or guards a pocket
    std::vector<std::uint8_t> in_fill = fb.mask;
    for (int id : fb.boundary) {
        CHECK(in_fill[id] == 1);
        if (df.dist[id] <= s) {
            // ball vertex adjacent to the outside: triangle inequality pins it near the sphere
            int ix = id % w, iy = id / w;
            bool ok = false;
            for (std::size_t o = 0; o < gr.off_dx.size(); ++o) {
                int nx = ix + gr.off_dx[o], ny = iy + gr.off_dy[o];
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                int nid = ny * w + nx;
                if (!in_fill[nid] &&
                    df.dist[id] >= s - edge_cost(gr, id, nid, static_cast<int>(o))) {
                    ok = true;
                    break;
                }
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("hitting radius: chamfer bounds, monotonicity, exact Weyl scaling") {
    GridSpec g = grid_with_box(64, 32, 32);
    double a = g.spacing();
    MollifiedField z = make_field(g, [](int, int) { return 0.0; });
    MetricGraph gr = build_graph(z, 0.4, Stencil::eight, 1.0);
    int cid = gr.local_id({gr.box.ix0 + 16, gr.box.iy0 + 16});
    DistanceField df = distance_field_local(gr, {cid});

    double prev = 0.0;
    for (double r : {4 * a, 6 * a, 9 * a, 12 * a}) {
        double tau = hitting_radius(df, r);
        CHECK(tau >= 2.0 / (1.0 + std::sqrt(2.0)) * r - a);
        CHECK(tau <= r + a);
        CHECK(tau >= prev);
        prev = tau;
    }
    CHECK_THROWS_AS(hitting_radius(df, 17 * a), std::invalid_argument);

    // constant shift scales tau by exp(xi c)
    MollifiedField fc = make_field(g, [](int, int) { return 0.8; });
    MetricGraph gc = build_graph(fc, 0.4, Stencil::eight, 1.0);
    DistanceField dfc = distance_field_local(gc, {cid});
    double r = 9 * a;
    CHECK(hitting_radius(dfc, r) ==
          doctest::Approx(std::exp(0.4 * 0.8) * hitting_radius(df, r)).epsilon(1e-13));
}
