#include "hardylab/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace hardylab::detail {
namespace {

// The FFTW planner is not thread safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::vector<cplx> transform(std::span<const cplx> x, int sign) {
    const int n = static_cast<int>(x.size());
    std::vector<cplx> out(x.begin(), x.end());
    if (n <= 1) return out;
    auto* buf = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

} // namespace

std::vector<cplx> fft_forward(std::span<const cplx> x) { return transform(x, FFTW_FORWARD); }
std::vector<cplx> fft_inverse(std::span<const cplx> x) { return transform(x, FFTW_BACKWARD); }

bool is_power_of_two(long long m) noexcept { return m > 0 && (m & (m - 1)) == 0; }

} // namespace hardylab::detail
