#pragma once

#include <cstdint>
#include <vector>

#include "lfpp/field.hpp"
#include "lfpp/grid.hpp"

namespace lfpp {

/// Heat-kernel smoothing of a field at physical scale eps: periodic convolution
/// with the Gaussian kernel of variance parameter s = eps^2/2, implemented as
/// the Fourier multiplier exp(-eps^2 |omega_k|^2 / 4) with continuum angular
/// frequencies omega_k = 2 pi k / side_length.
struct MollifiedField {
    GridSpec spec;
    std::uint64_t seed = 0;
    double eps = 0.0;
    std::vector<double> values;

    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * spec.n + ix]; }
};

/// Requires eps in [2*spacing, side_length/8]: below that the kernel is not
/// resolved on the grid; above, the wrap-around buffer is no longer respected.
MollifiedField mollify(const FieldSample& field, double eps);

/// Same transform on a raw value array (used to compose mollifications).
std::vector<double> mollify_values(const GridSpec& spec, const std::vector<double>& values,
                                   double eps);

}  // namespace lfpp
