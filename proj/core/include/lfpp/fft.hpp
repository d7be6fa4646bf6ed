#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lfpp {

/// Thin wrapper over FFTW's real 2-D transforms with a process-wide plan cache.
/// Plan creation is serialized internally; the execute calls are safe to run
/// concurrently on distinct buffers (new-array execution on cached plans).
namespace fft {

std::size_t complex_count(int n);  // n * (n/2 + 1)

/// out (length n*(n/2+1)) = unnormalized forward r2c DFT of in (length n*n, row-major).
void forward_r2c(int n, const double* in, std::complex<double>* out);

/// out (length n*n) = unnormalized backward c2r DFT of in. The half-spectrum
/// input is destroyed. No 1/n^2 factor is applied.
void backward_c2r(int n, std::complex<double>* in, double* out);

}  // namespace fft
}  // namespace lfpp
