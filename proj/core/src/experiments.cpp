#include "lfpp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lfpp/field.hpp"
#include "lfpp/rng.hpp"
#include "lfpp/task_pool.hpp"

namespace lfpp {

namespace {

int aligned_index(double coord, double a, double side) {
    double f = coord / a;
    double r = std::round(f);
    if (std::abs(f - r) > 1e-9 * side / a) {
        throw std::invalid_argument("crossing: square edge not grid aligned");
    }
    return static_cast<int>(r);
}

std::string level_stream(const std::string& name, double eps) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "/eps=%.17g", eps);
    return name + buf;
}

}  // namespace

Rect centered_square(const GridSpec& grid, double side) {
    double cx = grid.window.cx();
    double cy = grid.window.cy();
    Rect s{cx - side / 2.0, cy - side / 2.0, cx + side / 2.0, cy + side / 2.0};
    if (s.x0 < grid.window.x0 - 1e-12 || s.x1 > grid.window.x1 + 1e-12 ||
        s.y0 < grid.window.y0 - 1e-12 || s.y1 > grid.window.y1 + 1e-12) {
        throw std::invalid_argument("centered_square: square exceeds the window");
    }
    return s;
}

double crossing_on_graph(const MetricGraph& graph, const Rect& square, bool vertical) {
    const double a = graph.spec.spacing();
    const double L = graph.spec.side_length;
    int ix0 = aligned_index(square.x0, a, L);
    int ix1 = aligned_index(square.x1, a, L);
    int iy0 = aligned_index(square.y0, a, L);
    int iy1 = aligned_index(square.y1, a, L);
    if (!graph.box.contains(ix0, iy0) || !graph.box.contains(ix1, iy1)) {
        throw std::invalid_argument("crossing: square exceeds the window");
    }

    std::vector<int> sources;
    if (!vertical) {
        for (int iy = iy0; iy <= iy1; ++iy) sources.push_back(graph.local_id({ix0, iy}));
    } else {
        for (int ix = ix0; ix <= ix1; ++ix) sources.push_back(graph.local_id({ix, iy0}));
    }
    DistanceField df = distance_field_local(graph, sources);

    double best = kUnreachable;
    if (!vertical) {
        for (int iy = iy0; iy <= iy1; ++iy) best = std::min(best, df.dist[graph.local_id({ix1, iy})]);
    } else {
        for (int ix = ix0; ix <= ix1; ++ix) best = std::min(best, df.dist[graph.local_id({ix, iy1})]);
    }
    return best;
}

CrossingLevel crossing_median(const Parameters& params, const GridSpec& grid, double eps,
                              int replicas, std::uint64_t seed0, int workers,
                              const std::string& name, Stencil stencil) {
    if (replicas < 1) throw std::invalid_argument("crossing_median: replicas must be >= 1");
    if (grid.side_length < 2.0) {
        throw std::invalid_argument(
            "crossing_median: side_length must be >= 2 so the unit-radius normalization circle "
            "fits the torus");
    }
    Rect square = centered_square(grid, 1.0);
    Normalization norm = Normalization::circle_zero(grid.window.cx(), grid.window.cy(), 1.0);

    CrossingLevel level;
    level.eps = eps;
    level.seeds.resize(replicas);
    level.crossings.resize(replicas);
    std::string stream = level_stream(name, eps);
    for (int i = 0; i < replicas; ++i) level.seeds[i] = task_seed(seed0, stream, i);

    parallel_for_indexed(replicas, workers, [&](int i) {
        FieldSample f = sample_field(grid, level.seeds[i], norm);
        MollifiedField m = mollify(f, eps);
        MetricGraph g = build_graph(m, params.xi, stencil, 1.0);
        level.crossings[i] = crossing_on_graph(g, square, false);
    });

    level.median_crossing = median(level.crossings);
    if (replicas >= 2) {
        BootstrapCi ci = bootstrap_median_ci(level.crossings, 1000, task_seed(seed0, stream, 1u << 20));
        level.ci_lo = ci.lo;
        level.ci_hi = ci.hi;
    } else {
        level.ci_lo = level.ci_hi = level.median_crossing;
    }
    return level;
}

FitReport fit_points(const std::vector<double>& log_eps, const std::vector<double>& log_median) {
    if (log_eps.size() < 4) throw std::invalid_argument("fit_exponent: need >= 4 levels");
    LineFit f = ols_fit(log_eps, log_median);
    FitReport r;
    r.slope = f.slope;
    r.intercept = f.intercept;
    r.ci_lo = r.ci_hi = f.slope;
    r.points = static_cast<int>(log_eps.size());
    return r;
}

FitReport fit_exponent(const std::vector<CrossingLevel>& levels, int bootstrap_resamples,
                       std::uint64_t seed) {
    if (levels.size() < 4) throw std::invalid_argument("fit_exponent: need >= 4 eps levels");
    std::vector<double> lx(levels.size()), ly(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        lx[i] = std::log(levels[i].eps);
        ly[i] = std::log(levels[i].median_crossing);
    }
    FitReport rep = fit_points(lx, ly);

    if (bootstrap_resamples > 1) {
        CounterRng rng(seed, 0x66697462ULL);
        std::vector<double> slopes(bootstrap_resamples);
        std::vector<double> by(levels.size());
        for (int b = 0; b < bootstrap_resamples; ++b) {
            for (std::size_t i = 0; i < levels.size(); ++i) {
                const std::vector<double>& cs = levels[i].crossings;
                std::vector<double> draw(cs.size());
                for (std::size_t k = 0; k < cs.size(); ++k) draw[k] = cs[rng.next_u64() % cs.size()];
                by[i] = std::log(median(draw));
            }
            slopes[b] = ols_fit(lx, by).slope;
        }
        std::sort(slopes.begin(), slopes.end());
        rep.ci_lo = percentile_sorted(slopes, 0.025);
        rep.ci_hi = percentile_sorted(slopes, 0.975);
    }
    return rep;
}

BiLipReport bilipschitz_estimate(const MetricGraph& graph_a, const MetricGraph& graph_b,
                                 double beta, int pairs, std::uint64_t seed) {
    if (!(beta > 0.0) || !(beta < 1.0)) {
        throw std::invalid_argument("bilipschitz_estimate: beta must lie in (0,1)");
    }
    if (graph_a.box.ix0 != graph_b.box.ix0 || graph_a.box.ix1 != graph_b.box.ix1 ||
        graph_a.box.iy0 != graph_b.box.iy0 || graph_a.box.iy1 != graph_b.box.iy1) {
        throw std::invalid_argument("bilipschitz_estimate: graphs must share the window");
    }
    if (pairs < 1) throw std::invalid_argument("bilipschitz_estimate: pairs must be >= 1");

    const double a = graph_a.spec.spacing();
    const int w = graph_a.width();
    const int h = graph_a.height();
    const double min_side = a * (std::min(w, h) - 1);
    const int m = static_cast<int>(std::ceil(beta * min_side / a));
    if (m + 1 >= std::min(w, h) / 2) {
        throw std::invalid_argument("bilipschitz_estimate: beta separation exceeds the window");
    }

    // Directional probes (axis + diagonal at the separation radius) first,
    // then uniform pairs; both respect |u - v| >= beta * window side.
    const int probe_dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                  {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    int anchors = std::clamp(pairs / 64 + 1, 1, 64);
    int per_anchor = (pairs + anchors - 1) / anchors;

    CounterRng rng(seed, 0x62696c70ULL);
    BiLipReport rep;
    rep.beta = beta;
    rep.min_ratio = kUnreachable;
    rep.max_ratio = 0.0;
    int pair_id = 0;
    for (int ai = 0; ai < anchors && pair_id < pairs; ++ai) {
        // anchor inset so all probes stay inside
        int ax = m + 1 + static_cast<int>(rng.next_u64() % (w - 2 * (m + 1)));
        int ay = m + 1 + static_cast<int>(rng.next_u64() % (h - 2 * (m + 1)));
        int aid = ay * w + ax;
        DistanceField da = distance_field_local(graph_a, {aid});
        DistanceField db = distance_field_local(graph_b, {aid});

        for (int k = 0; k < per_anchor && pair_id < pairs; ++k) {
            int tx, ty;
            if (k < 8) {
                tx = ax + probe_dirs[k][0] * m;
                ty = ay + probe_dirs[k][1] * m;
            } else {
                int tries = 0;
                do {
                    tx = static_cast<int>(rng.next_u64() % w);
                    ty = static_cast<int>(rng.next_u64() % h);
                    ++tries;
                } while ((static_cast<double>(tx - ax) * (tx - ax) +
                          static_cast<double>(ty - ay) * (ty - ay)) < 1.0 * m * m &&
                         tries < 1000);
            }
            int tid = ty * w + tx;
            if (tid == aid) continue;
            BiLipPair p;
            p.pair_id = pair_id++;
            p.sep = a * std::sqrt(static_cast<double>(tx - ax) * (tx - ax) +
                                  static_cast<double>(ty - ay) * (ty - ay));
            p.da = da.dist[tid];
            p.db = db.dist[tid];
            p.ratio = p.db / p.da;
            rep.min_ratio = std::min(rep.min_ratio, p.ratio);
            rep.max_ratio = std::max(rep.max_ratio, p.ratio);
            rep.pairs.push_back(p);
        }
    }
    return rep;
}

double tightness_normalize(const Parameters& params, double distance, double r, double h_r) {
    return distance / (std::pow(r, params.xi * params.q) * std::exp(params.xi * h_r));
}

TightnessReport tightness_compare(const Parameters& params, const GridSpec& grid, double r1,
                                  double r2, int replicas, std::uint64_t seed0, int workers) {
    if (r1 == r2) {
        // allowed: the statistic is 0 by construction (same seeds)
    }
    TightnessReport rep;
    rep.r1 = r1;
    rep.r2 = r2;
    rep.seeds.resize(replicas);
    rep.normalized1.resize(replicas);
    rep.normalized2.resize(replicas);
    for (int i = 0; i < replicas; ++i) rep.seeds[i] = task_seed(seed0, "tightness", i);

    const double a = grid.spacing();
    const double cx = grid.window.cx();
    const double cy = grid.window.cy();

    auto one_scale = [&](const FieldSample& f, double r) {
        double h_r = circle_average(f, cx, cy, r);
        double eps = r / 8.0;
        MollifiedField m = mollify(f, eps);
        MetricGraph g = build_graph(m, params.xi, Stencil::eight, 1.0);
        Vertex u{static_cast<int>(std::round((cx - 0.25 * r) / a)),
                 static_cast<int>(std::round(cy / a))};
        Vertex v{static_cast<int>(std::round((cx + 0.25 * r) / a)),
                 static_cast<int>(std::round(cy / a))};
        double d = point_distance(g, u, v);
        return tightness_normalize(params, d, r, h_r);
    };

    parallel_for_indexed(replicas, workers, [&](int i) {
        FieldSample f = sample_field(grid, rep.seeds[i], Normalization::mean_zero());
        rep.normalized1[i] = one_scale(f, r1);
        rep.normalized2[i] = (r2 == r1) ? rep.normalized1[i] : one_scale(f, r2);
    });

    rep.ks = ks_statistic(rep.normalized1, rep.normalized2);
    return rep;
}

std::vector<RotationLevel> rotation_anisotropy(const Parameters& params, const GridSpec& grid,
                                               double anisotropy_a,
                                               const std::vector<double>& eps_list, int replicas,
                                               std::uint64_t seed0, int workers) {
    if (!(anisotropy_a >= 1.0)) {
        throw std::invalid_argument("rotation_anisotropy: anisotropy_a must be >= 1");
    }
    Rect square = centered_square(grid, 1.0);
    Normalization norm = Normalization::circle_zero(grid.window.cx(), grid.window.cy(), 1.0);

    std::vector<std::uint64_t> seeds(replicas);
    for (int i = 0; i < replicas; ++i) seeds[i] = task_seed(seed0, "rotation", i);

    std::vector<RotationLevel> levels(eps_list.size());
    for (std::size_t li = 0; li < eps_list.size(); ++li) {
        RotationLevel& lev = levels[li];
        lev.eps = eps_list[li];
        lev.horizontal.resize(replicas);
        lev.vertical.resize(replicas);
        parallel_for_indexed(replicas, workers, [&](int i) {
            FieldSample f = sample_field(grid, seeds[i], norm);
            MollifiedField m = mollify(f, lev.eps);
            MetricGraph g = build_graph(m, params.xi, Stencil::eight, anisotropy_a);
            lev.horizontal[i] = crossing_on_graph(g, square, false);
            lev.vertical[i] = crossing_on_graph(g, square, true);
        });
        lev.ratio = median(lev.vertical) / median(lev.horizontal);

        // paired bootstrap over replica indices
        CounterRng rng(task_seed(seed0, "rotation/bootstrap", li), 0x726f7461ULL);
        const int nboot = 1000;
        std::vector<double> ratios(nboot);
        std::vector<double> bh(replicas), bv(replicas);
        for (int b = 0; b < nboot; ++b) {
            for (int i = 0; i < replicas; ++i) {
                int j = static_cast<int>(rng.next_u64() % replicas);
                bh[i] = lev.horizontal[j];
                bv[i] = lev.vertical[j];
            }
            ratios[b] = median(bv) / median(bh);
        }
        std::sort(ratios.begin(), ratios.end());
        lev.ci_lo = percentile_sorted(ratios, 0.025);
        lev.ci_hi = percentile_sorted(ratios, 0.975);
        double mr = mean(ratios);
        double s2 = 0.0;
        for (double x : ratios) s2 += (x - mr) * (x - mr);
        lev.se = std::sqrt(s2 / (nboot - 1));
    }
    return levels;
}

HolderReport holder_scan(const MetricGraph& graph, const Parameters& params, int pairs_per_bin,
                         int bins, std::uint64_t seed) {
    if (pairs_per_bin < 1 || bins < 1) {
        throw std::invalid_argument("holder_scan: need >= 1 bin and >= 1 pair per bin");
    }
    const double a = graph.spec.spacing();
    const int w = graph.width();
    const int h = graph.height();
    const double min_side = a * (std::min(w, h) - 1);
    const double sep_lo = 4.0 * a;
    const double sep_hi = 0.2 * min_side;
    if (sep_hi <= sep_lo) throw std::invalid_argument("holder_scan: window too small for the scan");

    HolderReport rep;
    rep.chi_lo = 0.9 * params.xi * (params.q - 2.0);
    rep.chi_hi = 1.1 * params.xi * (params.q + 2.0);
    rep.bins = bins;
    rep.bin_fraction.assign(bins, 0.0);

    const int max_off = static_cast<int>(std::ceil(2.0 * sep_hi / a)) + 1;
    CounterRng rng(seed, 0x686f6c64ULL);

    int anchors = std::clamp(pairs_per_bin * bins / 48, 8, 64);
    int per_anchor_bin = (pairs_per_bin + anchors - 1) / anchors;

    std::vector<int> bin_total(bins, 0), bin_inside(bins, 0);
    for (int ai = 0; ai < anchors; ++ai) {
        int ax = max_off + static_cast<int>(rng.next_u64() % std::max(1, w - 2 * max_off));
        int ay = max_off + static_cast<int>(rng.next_u64() % std::max(1, h - 2 * max_off));
        DistanceField df = distance_field_local(graph, {ay * w + ax});
        for (int bi = 0; bi < bins; ++bi) {
            for (int k = 0; k < per_anchor_bin; ++k) {
                if (bin_total[bi] >= pairs_per_bin) break;
                double u = (bi + rng.next_unit()) / bins;
                double sep = sep_lo * std::pow(sep_hi / sep_lo, u);
                double theta = 2.0 * M_PI * rng.next_unit();
                int dx = static_cast<int>(std::round(sep * std::cos(theta) / a));
                int dy = static_cast<int>(std::round(sep * std::sin(theta) / a));
                if (dx == 0 && dy == 0) continue;
                int t1 = (ay + dy) * w + (ax + dx);
                int t2 = (ay + 2 * dy) * w + (ax + 2 * dx);
                HolderPair p;
                p.sep = a * std::sqrt(static_cast<double>(dx) * dx + static_cast<double>(dy) * dy);
                p.d1 = df.dist[t1];
                p.d2 = df.dist[t2];
                p.slope = std::log(p.d2 / p.d1) / std::log(2.0);
                p.in_band = p.slope > rep.chi_lo && p.slope < rep.chi_hi;
                rep.pairs.push_back(p);
                bin_total[bi] += 1;
                bin_inside[bi] += p.in_band ? 1 : 0;
            }
        }
    }
    int total = 0, inside = 0;
    for (int bi = 0; bi < bins; ++bi) {
        total += bin_total[bi];
        inside += bin_inside[bi];
        rep.bin_fraction[bi] =
            bin_total[bi] ? static_cast<double>(bin_inside[bi]) / bin_total[bi] : 0.0;
    }
    rep.fraction_in_band = total ? static_cast<double>(inside) / total : 0.0;
    return rep;
}

}  // namespace lfpp
