#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lfpp/metric_graph.hpp"
#include "lfpp/rng.hpp"
#include "oracles.hpp"

using namespace lfpp;

namespace {

// Grid whose window box is exactly bw x bh vertices starting at index n/4.
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

MollifiedField zero_field(const GridSpec& g) {
    return make_field(g, [](int, int) { return 0.0; });
}

MollifiedField random_field(const GridSpec& g, std::uint64_t seed, double scale = 1.0) {
    CounterRng rng(seed, 0xf1e1dULL);
    return make_field(g, [&](int, int) { return scale * rng.next_normal(); });
}

}  // namespace

TEST_CASE("build_graph weights and edge lengths") {
    GridSpec g = grid_with_box(16, 8, 8);
    double a = g.spacing();

    MollifiedField z = zero_field(g);
    MetricGraph gz = build_graph(z, 0.4, Stencil::eight, 1.0);
    for (double w : gz.weight) CHECK(w == 1.0);
    CHECK(gz.off_len[0] == doctest::Approx(a).epsilon(1e-15));       // axis
    CHECK(gz.off_len[4] == doctest::Approx(a * std::sqrt(2.0)));      // diagonal

    MollifiedField c = make_field(g, [](int, int) { return 0.7; });
    MetricGraph gc = build_graph(c, 0.4, Stencil::eight, 1.0);
    double expected = std::exp(0.4 * 0.7);
    for (double w : gc.weight) CHECK(w == doctest::Approx(expected).epsilon(1e-15));

    // anisotropy stretches vertical offsets only
    MetricGraph ga = build_graph(z, 0.4, Stencil::eight, 4.0);
    CHECK(ga.off_len[0] == doctest::Approx(a).epsilon(1e-15));        // (1,0)
    CHECK(ga.off_len[2] == doctest::Approx(2.0 * a).epsilon(1e-15));  // (0,1)

    CHECK_THROWS_AS(build_graph(z, 0.0, Stencil::eight, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(z, 0.4, Stencil::eight, 0.5), std::invalid_argument);
}

TEST_CASE("zero-field chamfer distances") {
    GridSpec g = grid_with_box(32, 16, 16);
    double a = g.spacing();
    MetricGraph gr = build_graph(zero_field(g), 0.4, Stencil::eight, 1.0);
    IndexBox b = gr.box;
    Vertex u{b.ix0, b.iy0};
    Vertex v{b.ix0 + 3, b.iy0 + 4};
    CHECK(point_distance(gr, u, v) ==
          doctest::Approx((1.0 + 3.0 * std::sqrt(2.0)) * a).epsilon(1e-13));
    // axis pair: Euclidean separation
    Vertex w{b.ix0 + 7, b.iy0};
    CHECK(point_distance(gr, u, w) == doctest::Approx(7.0 * a).epsilon(1e-13));
    CHECK(point_distance(gr, u, u) == 0.0);
}

TEST_CASE("constant shift scales distances and keeps the tree") {
    GridSpec g = grid_with_box(32, 16, 16);
    MollifiedField f = random_field(g, 7);
    MollifiedField fc = f;
    const double c = 0.9;
    for (double& v : fc.values) v += c;
    const double xi = 0.41;
    MetricGraph g0 = build_graph(f, xi, Stencil::eight, 1.0);
    MetricGraph g1 = build_graph(fc, xi, Stencil::eight, 1.0);
    DistanceField d0 = distance_field_local(g0, {0});
    DistanceField d1 = distance_field_local(g1, {0});
    double scale = std::exp(xi * c);
    for (int i = 0; i < g0.vertex_count(); ++i) {
        CHECK(d1.dist[i] == doctest::Approx(scale * d0.dist[i]).epsilon(1e-13));
        CHECK(d1.pred[i] == d0.pred[i]);
    }
}

TEST_CASE("Dijkstra equals exhaustive simple-path enumeration on 4x4 grids") {
    GridSpec g = grid_with_box(16, 4, 4);
    double a = g.spacing();
    for (int trial = 0; trial < 100; ++trial) {
        oracles::TinyGrid tiny;
        tiny.w = 4;
        tiny.h = 4;
        tiny.spacing = a;
        tiny.diagonals = true;
        tiny.weight.resize(16);
        CounterRng rng(5000 + trial, 0x4242ULL);
        for (double& w : tiny.weight) w = std::exp(rng.next_normal());

        MollifiedField f = make_field(g, [&](int ix, int iy) {
            return std::log(tiny.weight[iy * 4 + ix]);
        });
        // xi = 1 so graph weights reproduce tiny.weight exactly up to exp(log(w))
        MetricGraph gr = build_graph(f, 1.0, Stencil::eight, 1.0);
        DistanceField df = distance_field_local(gr, {0});
        for (int v = 0; v < 16; ++v) {
            double want = oracles::brute_force_distance(tiny, 0, v);
            CHECK(df.dist[v] == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("point_distance symmetry and triangle inequality along edges") {
    GridSpec g = grid_with_box(32, 16, 16);
    MollifiedField f = random_field(g, 17);
    MetricGraph gr = build_graph(f, 0.4, Stencil::eight, 1.0);
    IndexBox b = gr.box;
    Vertex u{b.ix0 + 2, b.iy0 + 3};
    Vertex v{b.ix0 + 13, b.iy0 + 11};
    double duv = point_distance(gr, u, v);
    double dvu = point_distance(gr, v, u);
    CHECK(duv == doctest::Approx(dvu).epsilon(1e-12));

    DistanceField df = distance_field_local(gr, {gr.local_id(u)});
    const int w = gr.width();
    for (int id = 0; id < gr.vertex_count(); ++id) {
        int ix = id % w, iy = id / w;
        for (std::size_t o = 0; o < gr.off_dx.size(); ++o) {
            int nx = ix + gr.off_dx[o], ny = iy + gr.off_dy[o];
            if (nx < 0 || nx >= w || ny < 0 || ny >= gr.height()) continue;
            int nid = ny * w + nx;
            CHECK(df.dist[nid] <= df.dist[id] + edge_cost(gr, id, nid, static_cast<int>(o)));
        }
    }
}

TEST_CASE("geodesic tracing: staircase, exact length, shift invariance") {
    GridSpec g = grid_with_box(32, 16, 16);
    double a = g.spacing();
    MetricGraph gz = build_graph(zero_field(g), 0.4, Stencil::eight, 1.0);
    IndexBox b = gz.box;
    Vertex src{b.ix0 + 1, b.iy0 + 2};
    DistanceField df = distance_field_local(gz, {gz.local_id(src)});

    Geodesic self = trace_geodesic(df, src);
    CHECK(self.vertices.size() == 1);
    CHECK(self.length == 0.0);

    Vertex tgt{b.ix0 + 9, b.iy0 + 7};  // offset (8, 5): 8 staircase steps
    Geodesic geo = trace_geodesic(df, tgt);
    CHECK(static_cast<int>(geo.vertices.size()) - 1 == 8);
    CHECK(geo.length == df.dist[gz.local_id(tgt)]);
    // length equals the edge-cost sum exactly
    double sum = 0.0;
    for (std::size_t i = 1; i < geo.vertices.size(); ++i) {
        Vertex p = geo.vertices[i - 1], q = geo.vertices[i];
        int dx = q.ix - p.ix, dy = q.iy - p.iy;
        sum += a * std::sqrt(dx * dx + dy * dy);
    }
    CHECK(geo.length == doctest::Approx(sum).epsilon(1e-13));

    // constant shift: identical vertex sequence, scaled length
    MollifiedField fc = make_field(g, [](int, int) { return 1.3; });
    MetricGraph gc = build_graph(fc, 0.4, Stencil::eight, 1.0);
    DistanceField dfc = distance_field_local(gc, {gc.local_id(src)});
    Geodesic geoc = trace_geodesic(dfc, tgt);
    REQUIRE(geoc.vertices.size() == geo.vertices.size());
    for (std::size_t i = 0; i < geo.vertices.size(); ++i) {
        CHECK(geoc.vertices[i] == geo.vertices[i]);
    }
    CHECK(geoc.length == doctest::Approx(std::exp(0.4 * 1.3) * geo.length).epsilon(1e-13));

    CHECK_THROWS(trace_geodesic(df, Vertex{b.ix0 - 1, b.iy0}));
}

TEST_CASE("internal distances: full window, disconnection, harmless exclusion") {
    GridSpec g = grid_with_box(32, 16, 16);
    MollifiedField f = random_field(g, 23);
    MetricGraph gr = build_graph(f, 0.4, Stencil::eight, 1.0);
    IndexBox b = gr.box;
    Vertex u{b.ix0 + 1, b.iy0 + 8};
    Vertex v{b.ix0 + 14, b.iy0 + 8};

    std::vector<std::uint8_t> whole(gr.vertex_count(), 1);
    CHECK(internal_distance_masked(gr, u, v, whole) == point_distance(gr, u, v));

    // full separating column between u and v
    std::vector<std::uint8_t> cut(gr.vertex_count(), 1);
    for (int iy = 0; iy < gr.height(); ++iy) cut[iy * gr.width() + 7] = 0;
    CHECK(internal_distance_masked(gr, u, v, cut) == kUnreachable);

    // one removed vertex off the optimal staircase leaves the distance as-is
    GridSpec gz = grid_with_box(32, 16, 16);
    MetricGraph zz = build_graph(zero_field(gz), 0.4, Stencil::eight, 1.0);
    Vertex zu{b.ix0 + 2, b.iy0 + 2};
    Vertex zv{b.ix0 + 10, b.iy0 + 10};
    std::vector<std::uint8_t> hole(zz.vertex_count(), 1);
    hole[14 * zz.width() + 2] = 0;  // (2,14): far from the diagonal
    CHECK(internal_distance_masked(zz, zu, zv, hole) == point_distance(zz, zu, zv));
    CHECK(internal_distance_masked(zz, zu, zv, hole) ==
          internal_distance(zz, zu, zv, [&](Vertex w) {
              return !(w.ix == b.ix0 + 2 && w.iy == b.iy0 + 14);
          }));

    std::vector<std::uint8_t> no_u(gr.vertex_count(), 1);
    no_u[gr.local_id(u)] = 0;
    CHECK_THROWS_AS(internal_distance_masked(gr, u, v, no_u), std::invalid_argument);
}

TEST_CASE("internal_distance never beats the free distance") {
    GridSpec g = grid_with_box(32, 16, 16);
    MollifiedField f = random_field(g, 31);
    MetricGraph gr = build_graph(f, 0.5, Stencil::eight, 1.0);
    IndexBox b = gr.box;
    Vertex u{b.ix0 + 3, b.iy0 + 3};
    Vertex v{b.ix0 + 12, b.iy0 + 13};
    CounterRng rng(99, 0x7ULL);
    std::vector<std::uint8_t> region(gr.vertex_count());
    for (auto& m : region) m = rng.next_unit() < 0.85 ? 1 : 0;
    region[gr.local_id(u)] = region[gr.local_id(v)] = 1;
    double restricted = internal_distance_masked(gr, u, v, region);
    CHECK(restricted >= point_distance(gr, u, v));
}

TEST_CASE("weyl_shift: identity, constant scaling, corridor attraction") {
    GridSpec g = grid_with_box(32, 16, 16);
    MollifiedField f = random_field(g, 41);
    const double xi = 0.4;
    MetricGraph gr = build_graph(f, xi, Stencil::eight, 1.0);

    MetricGraph same = weyl_shift(gr, std::vector<double>(gr.vertex_count(), 0.0));
    for (int i = 0; i < gr.vertex_count(); ++i) CHECK(same.weight[i] == gr.weight[i]);

    const double c = 0.65;
    MetricGraph shifted = weyl_shift(gr, std::vector<double>(gr.vertex_count(), c));
    DistanceField d0 = distance_field_local(gr, {0});
    DistanceField d1 = distance_field_local(shifted, {0});
    double scale = std::exp(xi * c);
    for (int i = 0; i < gr.vertex_count(); ++i) {
        CHECK(d1.dist[i] == doctest::Approx(scale * d0.dist[i]).epsilon(1e-12));
        CHECK(d1.pred[i] == d0.pred[i]);
    }

    // weyl_shift equals rebuilding from the shifted field, bitwise
    MollifiedField fc = f;
    for (double& v : fc.values) v += c;
    MetricGraph rebuilt = build_graph(fc, xi, Stencil::eight, 1.0);
    for (int i = 0; i < gr.vertex_count(); ++i) {
        CHECK(shifted.weight[i] == rebuilt.weight[i]);
        CHECK(shifted.field[i] == rebuilt.field[i]);
    }
}

TEST_CASE("a deep corridor pulls the geodesic in") {
    GridSpec g = grid_with_box(128, 64, 64);
    MollifiedField f = random_field(g, 51, 0.3);
    const double xi = 0.4;
    MetricGraph gr = build_graph(f, xi, Stencil::eight, 1.0);
    IndexBox b = gr.box;

    const int corridor_row = 40;  // local iy of the corridor
    const int travel_row = 16;    // endpoints row, far from the corridor
    Vertex u{b.ix0 + 2, b.iy0 + travel_row};
    Vertex v{b.ix0 + 61, b.iy0 + travel_row};

    auto visits_row = [&](const Geodesic& geo, int local_row) {
        for (const Vertex& w : geo.vertices) {
            if (w.iy - b.iy0 == local_row) return true;
        }
        return false;
    };

    DistanceField plain = distance_field_local(gr, {gr.local_id(u)});
    Geodesic before = trace_geodesic(plain, v);
    CHECK(!visits_row(before, corridor_row));

    std::vector<double> bump(gr.vertex_count(), 0.0);
    for (int ix = 0; ix < gr.width(); ++ix) bump[corridor_row * gr.width() + ix] = -5.0 / xi;
    MetricGraph pulled = weyl_shift(gr, bump);
    DistanceField dpull = distance_field_local(pulled, {pulled.local_id(u)});
    Geodesic after = trace_geodesic(dpull, v);
    CHECK(visits_row(after, corridor_row));
}

TEST_CASE("locality: graphs built from region-restricted fields agree exactly") {
    GridSpec g = grid_with_box(64, 32, 32);
    for (int trial = 0; trial < 10; ++trial) {
        MollifiedField f = random_field(g, 600 + trial);
        MetricGraph full = build_graph(f, 0.4, Stencil::eight, 1.0);

        CounterRng rng(800 + trial, 0x11ULL);
        int x0 = 2 + static_cast<int>(rng.next_u64() % 8);
        int y0 = 2 + static_cast<int>(rng.next_u64() % 8);
        int x1 = x0 + 10 + static_cast<int>(rng.next_u64() % 12);
        int y1 = y0 + 10 + static_cast<int>(rng.next_u64() % 12);
        std::vector<std::uint8_t> region(full.vertex_count(), 0);
        for (int iy = y0; iy <= y1; ++iy) {
            for (int ix = x0; ix <= x1; ++ix) region[iy * full.width() + ix] = 1;
        }

        // scrub the field outside the region before building the second graph
        MollifiedField scrubbed = f;
        IndexBox b = g.window_box();
        for (int iy = b.iy0; iy <= b.iy1; ++iy) {
            for (int ix = b.ix0; ix <= b.ix1; ++ix) {
                int lid = (iy - b.iy0) * full.width() + (ix - b.ix0);
                if (!region[lid]) {
                    scrubbed.values[static_cast<std::size_t>(iy) * g.n + ix] = 40.0;
                }
            }
        }
        MetricGraph scrub_graph = build_graph(scrubbed, 0.4, Stencil::eight, 1.0);

        Vertex u{b.ix0 + x0 + 1, b.iy0 + y0 + 1};
        Vertex v{b.ix0 + x1 - 1, b.iy0 + y1 - 1};
        double d_full = internal_distance_masked(full, u, v, region);
        double d_scrub = internal_distance_masked(scrub_graph, u, v, region);
        CHECK(d_full == d_scrub);
    }
}

TEST_CASE("length-space identity at every reached vertex") {
    GridSpec g = grid_with_box(32, 16, 16);
    MollifiedField f = random_field(g, 71);
    MetricGraph gr = build_graph(f, 0.45, Stencil::eight, 1.0);
    DistanceField df = distance_field_local(gr, {5});
    const int w = gr.width();
    for (int id = 0; id < gr.vertex_count(); ++id) {
        if (id == 5) continue;
        int ix = id % w, iy = id / w;
        double best = kUnreachable;
        for (std::size_t o = 0; o < gr.off_dx.size(); ++o) {
            int nx = ix + gr.off_dx[o], ny = iy + gr.off_dy[o];
            if (nx < 0 || nx >= w || ny < 0 || ny >= gr.height()) continue;
            int nid = ny * w + nx;
            best = std::min(best, df.dist[nid] + edge_cost(gr, nid, id, static_cast<int>(o)));
        }
        CHECK(df.dist[id] == best);
    }
}

TEST_CASE("stencil monotonicity and the diagonal chamfer extreme") {
    GridSpec g = grid_with_box(32, 16, 16);
    MollifiedField f = random_field(g, 81);
    MetricGraph g4 = build_graph(f, 0.4, Stencil::four, 1.0);
    MetricGraph g8 = build_graph(f, 0.4, Stencil::eight, 1.0);
    MetricGraph g16 = build_graph(f, 0.4, Stencil::sixteen, 1.0);
    DistanceField d4 = distance_field_local(g4, {0});
    DistanceField d8 = distance_field_local(g8, {0});
    DistanceField d16 = distance_field_local(g16, {0});
    for (int i = 0; i < g4.vertex_count(); ++i) {
        CHECK(d4.dist[i] >= d8.dist[i]);
        CHECK(d8.dist[i] >= d16.dist[i]);
    }

    MetricGraph z4 = build_graph(zero_field(g), 0.4, Stencil::four, 1.0);
    MetricGraph z8 = build_graph(zero_field(g), 0.4, Stencil::eight, 1.0);
    IndexBox b = z4.box;
    Vertex u{b.ix0, b.iy0};
    Vertex diag{b.ix0 + 9, b.iy0 + 9};
    double r = point_distance(z4, u, diag) / point_distance(z8, u, diag);
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}
