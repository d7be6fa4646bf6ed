#include "lfpp/confluence.hpp"

#include <algorithm>
#include <stdexcept>

#include "lfpp/rng.hpp"

namespace lfpp {

ConfluenceEntry confluence_statistic(const DistanceField& dfield, double s, double t,
                                     TargetMode mode, int sample_m, std::uint64_t sample_seed) {
    if (!(s > 0.0) || !(s < t)) {
        throw std::invalid_argument("confluence_statistic: need 0 < s < t");
    }
    FilledBall inner = filled_metric_ball(dfield, s);
    FilledBall outer = filled_metric_ball(dfield, t);

    ConfluenceEntry e;
    e.s = s;
    e.t = t;

    if (mode == TargetMode::all_boundary) {
        e.targets = outer.boundary;
    } else {
        if (sample_m <= 0) throw std::invalid_argument("confluence_statistic: sample_m must be > 0");
        std::vector<int> pool = outer.boundary;
        CounterRng rng(sample_seed, 0x636f6e66ULL);
        int m = std::min<int>(sample_m, static_cast<int>(pool.size()));
        for (int i = 0; i < m; ++i) {  // partial Fisher-Yates
            int j = i + static_cast<int>(rng.next_u64() % (pool.size() - i));
            std::swap(pool[i], pool[j]);
            e.targets.push_back(pool[i]);
        }
        std::sort(e.targets.begin(), e.targets.end());
    }
    e.target_count = static_cast<int>(e.targets.size());

    std::vector<std::uint8_t> inner_bdy(dfield.dist.size(), 0);
    for (int id : inner.boundary) inner_bdy[id] = 1;

    // Walking target -> source along predecessors, the last inner-boundary
    // vertex seen is the first crossing on the forward (center -> target) path.
    std::vector<int> hits;
    for (int target : e.targets) {
        int cur = target;
        int first_crossing = -1;
        while (cur != -1) {
            if (inner_bdy[cur]) first_crossing = cur;
            cur = dfield.pred[cur];
        }
        if (first_crossing < 0) {
            throw std::runtime_error(
                "confluence_statistic: target path misses the inner boundary");
        }
        hits.push_back(first_crossing);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    e.ancestors = std::move(hits);
    return e;
}

}  // namespace lfpp
