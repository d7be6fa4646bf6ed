#include "lfpp/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace lfpp {
namespace fft {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex g_plan_mutex;
std::map<int, PlanPair>& plan_cache() {
    static std::map<int, PlanPair> cache;
    return cache;
}

// Plans are created once per grid size with FFTW_ESTIMATE (deterministic plan
// selection) on scratch buffers, then reused via the new-array execute API.
// All caller buffers are fftw_malloc-aligned through the vector allocators
// below being replaced by plain new[]; FFTW_UNALIGNED keeps execution valid
// for arbitrary alignment at a negligible cost for these sizes.
const PlanPair& plans_for(int n) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    double* re = fftw_alloc_real(static_cast<std::size_t>(n) * n);
    fftw_complex* cx = fftw_alloc_complex(static_cast<std::size_t>(n) * (n / 2 + 1));
    if (!re || !cx) throw std::runtime_error("fft: allocation failure during planning");

    PlanPair p;
    p.fwd = fftw_plan_dft_r2c_2d(n, n, re, cx, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.bwd = fftw_plan_dft_c2r_2d(n, n, cx, re, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(re);
    fftw_free(cx);
    if (!p.fwd || !p.bwd) throw std::runtime_error("fft: planning failed");
    return cache.emplace(n, p).first->second;
}

}  // namespace

std::size_t complex_count(int n) {
    return static_cast<std::size_t>(n) * (n / 2 + 1);
}

void forward_r2c(int n, const double* in, std::complex<double>* out) {
    const PlanPair& p = plans_for(n);
    fftw_execute_dft_r2c(p.fwd, const_cast<double*>(in),
                         reinterpret_cast<fftw_complex*>(out));
}

void backward_c2r(int n, std::complex<double>* in, double* out) {
    const PlanPair& p = plans_for(n);
    fftw_execute_dft_c2r(p.bwd, reinterpret_cast<fftw_complex*>(in), out);
}

}  // namespace fft
}  // namespace lfpp
