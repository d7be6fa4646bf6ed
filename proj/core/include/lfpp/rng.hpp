#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace lfpp {

/// splitmix64 finalizer; good 64-bit mixing for keying streams.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Per-task seed derivation: hash of (root seed, experiment name, replica index).
/// Adding replicas or experiments never perturbs existing streams.
inline std::uint64_t task_seed(std::uint64_t root, std::string_view name, std::uint64_t index) {
    return mix64(root ^ mix64(fnv1a64(name)) ^ mix64(index + 0x51ed2700a1b4e7d3ULL));
}

/// Counter-based generator keyed by (seed, stream). Streams are independent of
/// the order in which they are instantiated, so parallel consumers keyed by
/// mode or replica index reproduce bitwise regardless of scheduling.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix64(mix64(seed ^ 0x8ce1f9ab35310d0bULL) ^ mix64(stream))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0,1); never returns 0 so log() below is safe.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal pair via Box-Muller.
    void next_normal_pair(double& z0, double& z1) {
        double u1 = next_unit();
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * M_PI * u2;
        z0 = r * std::cos(t);
        z1 = r * std::sin(t);
    }

    double next_normal() {
        double a, b;
        next_normal_pair(a, b);
        return a;
    }

private:
    std::uint64_t state_;
};

}  // namespace lfpp
