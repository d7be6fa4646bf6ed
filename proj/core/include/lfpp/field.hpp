#pragma once

#include <cstdint>
#include <vector>

#include "lfpp/grid.hpp"

namespace lfpp {

enum class NormKind { mean_zero, circle_average_zero };

/// How the sampled field fixes its additive constant.
struct Normalization {
    NormKind kind = NormKind::mean_zero;
    double cx = 0.0, cy = 0.0, radius = 0.0;  // circle, for circle_average_zero

    static Normalization mean_zero() { return {}; }
    static Normalization circle_zero(double cx, double cy, double radius) {
        return Normalization{NormKind::circle_average_zero, cx, cy, radius};
    }
};

/// One realization of the mean-zero log-correlated torus field.
/// values is row-major: values[iy * n + ix], vertex (ix, iy) at physical
/// (ix * spacing, iy * spacing).
struct FieldSample {
    GridSpec spec;
    std::uint64_t seed = 0;
    Normalization norm;
    std::vector<double> values;

    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * spec.n + ix]; }
};

/// Spectral synthesis: independent complex Gaussians per Fourier mode k != 0
/// with variance S(k) = kappa(n) / (n^2 * (4 - 2cos(2pi k1/n) - 2cos(2pi k2/n))),
/// Hermitian symmetry enforced, zero mode removed, requested normalization
/// applied. Deterministic function of (spec, seed, normalization); mode draws
/// are keyed by (seed, mode index) so sampling order never matters.
FieldSample sample_field(const GridSpec& spec, std::uint64_t seed, const Normalization& norm);

/// Calibration factor kappa(n) scaling the inverse-Laplacian spectrum so the
/// covariance increment between axis lags n/16 and n/8 equals log 2 exactly,
/// i.e. the field is log-correlated at window scales: Cov ~ -log(|z-w|/L) + O(1).
double covariance_calibration(int n);

/// Exact variance of the (heat-kernel-mollified) field at a vertex:
/// sum over nonzero modes of S(k) * exp(-eps^2 |omega_k|^2 / 2), with
/// omega_k = 2 pi k~ / side_length (k~ wrapped to [-n/2, n/2)). eps = 0 gives
/// the unmollified variance. Deterministic; no Monte Carlo involved.
double spectral_point_variance(const GridSpec& spec, double eps);

/// Exact covariance of the field between two vertices separated by the axis
/// lag (m, 0): sum over nonzero modes of S(k) cos(2 pi k1 m / n).
double spectral_axis_covariance(const GridSpec& spec, int lag);

/// Mean of bilinearly interpolated values over max(64, ceil(2 pi r / spacing))
/// equispaced circle points; periodic in the torus, no window constraint.
/// Used for circle_average_zero normalization.
double torus_circle_average(const GridSpec& spec, const std::vector<double>& values, double cx,
                            double cy, double radius);

/// Window-checked circle average of a sampled field. Throws
/// std::invalid_argument if the circle exits the window or radius < 4*spacing.
double circle_average(const FieldSample& field, double cx, double cy, double radius);

/// Periodic bilinear interpolation of a row-major n x n array at physical (x, y).
double bilinear_periodic(const GridSpec& spec, const std::vector<double>& values, double x,
                         double y);

}  // namespace lfpp
