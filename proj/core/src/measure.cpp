#include "lfpp/measure.hpp"

#include <cmath>
#include <stdexcept>

#include "lfpp/balls.hpp"
#include "lfpp/field.hpp"
#include "lfpp/rng.hpp"
#include "lfpp/stats.hpp"
#include "lfpp/task_pool.hpp"

namespace lfpp {

namespace {

void check_region_in_window(const GridSpec& spec, const IndexBox& region) {
    IndexBox wb = spec.window_box();
    if (region.ix0 < wb.ix0 || region.ix1 > wb.ix1 || region.iy0 < wb.iy0 ||
        region.iy1 > wb.iy1 || region.width() < 1 || region.height() < 1) {
        throw std::invalid_argument("gmc_mass: region must lie inside the window");
    }
}

IndexBox rect_to_box(const GridSpec& spec, const Rect& r) {
    const double a = spec.spacing();
    const double guard = 1e-9;
    IndexBox b;
    b.ix0 = static_cast<int>(std::ceil(r.x0 / a - guard));
    b.iy0 = static_cast<int>(std::ceil(r.y0 / a - guard));
    b.ix1 = static_cast<int>(std::floor(r.x1 / a + guard));
    b.iy1 = static_cast<int>(std::floor(r.y1 / a + guard));
    return b;
}

}  // namespace

double gmc_mass(const MollifiedField& mollified, double gamma, const IndexBox& region) {
    check_region_in_window(mollified.spec, region);
    const int n = mollified.spec.n;
    const double a = mollified.spec.spacing();
    const double pref = std::pow(mollified.eps, gamma * gamma / 2.0);
    double sum = 0.0;
    for (int iy = region.iy0; iy <= region.iy1; ++iy) {
        for (int ix = region.ix0; ix <= region.ix1; ++ix) {
            sum += std::exp(gamma * mollified.values[static_cast<std::size_t>(iy) * n + ix]);
        }
    }
    return pref * sum * a * a;
}

double gmc_mass_masked(const MollifiedField& mollified, double gamma,
                       const std::vector<std::uint8_t>& mask, const IndexBox& window) {
    const int n = mollified.spec.n;
    const double a = mollified.spec.spacing();
    const double pref = std::pow(mollified.eps, gamma * gamma / 2.0);
    double sum = 0.0;
    const int w = window.width();
    for (std::size_t id = 0; id < mask.size(); ++id) {
        if (!mask[id]) continue;
        int ix = window.ix0 + static_cast<int>(id) % w;
        int iy = window.iy0 + static_cast<int>(id) / w;
        sum += std::exp(gamma * mollified.values[static_cast<std::size_t>(iy) * n + ix]);
    }
    return pref * sum * a * a;
}

double gmc_expectation_correction(const GridSpec& spec, double gamma, double eps) {
    double var = spectral_point_variance(spec, eps);
    return std::exp(-(gamma * gamma / 2.0) * (var - std::log(1.0 / eps)));
}

CoordinateCheck gmc_coordinate_check(const FieldSample& field, double gamma, double r,
                                     const Rect& region, double eps) {
    if (r != 0.5 && r != 0.25) {
        throw std::invalid_argument("gmc_coordinate_check: r must be 1/2 or 1/4");
    }
    const GridSpec& spec = field.spec;
    const int stride = static_cast<int>(std::round(1.0 / r));
    if (spec.n % stride != 0) {
        throw std::invalid_argument("gmc_coordinate_check: grid not divisible by 1/r");
    }
    Rect shrunk{r * region.x0, r * region.y0, r * region.x1, r * region.y1};
    if (!spec.window.contains(region.x0, region.y0) || !spec.window.contains(region.x1, region.y1) ||
        !spec.window.contains(shrunk.x0, shrunk.y0) || !spec.window.contains(shrunk.x1, shrunk.y1)) {
        throw std::invalid_argument("gmc_coordinate_check: region and r*region must lie in window");
    }

    CoordinateCheck out;

    // direct side: mu_h at mollification eps over the shrunk region
    MollifiedField fine = mollify(field, eps);
    out.mass_direct = gmc_mass(fine, gamma, rect_to_box(spec, shrunk));

    // rescaled side: subsample the field on the stride-coarse torus, where the
    // map z -> r z is an exact lattice correspondence; mollify at eps/r there
    // and add Q log r (factored out of the exponential sum below).
    GridSpec coarse;
    coarse.n = spec.n / stride;
    coarse.side_length = spec.side_length;
    coarse.window = spec.window;
    std::vector<double> sub(static_cast<std::size_t>(coarse.n) * coarse.n);
    for (int iy = 0; iy < coarse.n; ++iy) {
        for (int ix = 0; ix < coarse.n; ++ix) {
            sub[static_cast<std::size_t>(iy) * coarse.n + ix] =
                field.values[static_cast<std::size_t>(iy) * stride * spec.n + ix * stride];
        }
    }
    std::vector<double> coarse_moll = mollify_values(coarse, sub, eps / r);

    const double ca = coarse.spacing();
    IndexBox cb = rect_to_box(coarse, region);
    double sum = 0.0;
    for (int iy = cb.iy0; iy <= cb.iy1; ++iy) {
        for (int ix = cb.ix0; ix <= cb.ix1; ++ix) {
            sum += std::exp(gamma * coarse_moll[static_cast<std::size_t>(iy) * coarse.n + ix]);
        }
    }
    double q = 2.0 / gamma + gamma / 2.0;
    out.mass_rescaled =
        std::pow(eps / r, gamma * gamma / 2.0) * std::pow(r, gamma * q) * sum * ca * ca;
    return out;
}

DimensionReport ball_volume_dimension(const Parameters& params, const GridSpec& grid, double eps,
                                      const std::vector<double>& euclid_ladder, int replicas,
                                      std::uint64_t seed0, int workers) {
    if (euclid_ladder.size() < 4) {
        throw std::invalid_argument("ball_volume_dimension: need a ladder of >= 4 radii");
    }
    DimensionReport rep;
    rep.gamma = params.gamma;
    rep.eps = eps;
    rep.replicas.resize(replicas);

    const double a = grid.spacing();
    IndexBox wb = grid.window_box();
    Vertex center{static_cast<int>(std::round(grid.window.cx() / a)),
                  static_cast<int>(std::round(grid.window.cy() / a))};

    parallel_for_indexed(replicas, workers, [&](int i) {
        DimensionReplica& rr = rep.replicas[i];
        rr.seed = task_seed(seed0, "dim", i);
        FieldSample f = sample_field(grid, rr.seed, Normalization::mean_zero());
        MollifiedField m = mollify(f, eps);
        MetricGraph g = build_graph(m, params.xi, Stencil::eight, 1.0);
        DistanceField df = distance_field_local(g, {g.local_id(center)});

        std::vector<double> ls, lm;
        for (double r : euclid_ladder) {
            double s = hitting_radius(df, r);
            FilledBall fb = filled_metric_ball(df, s);
            double mass = gmc_mass_masked(m, params.gamma, fb.mask, g.box);
            rr.points.push_back({s, mass});
            ls.push_back(std::log(s));
            lm.push_back(std::log(mass));
        }
        rr.slope = ols_fit(ls, lm).slope;
    });

    std::vector<double> slopes;
    for (const auto& rr : rep.replicas) slopes.push_back(rr.slope);
    rep.mean_slope = mean(slopes);
    (void)wb;
    return rep;
}

}  // namespace lfpp
