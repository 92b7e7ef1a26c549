#pragma once

#include <span>
#include <vector>

#include "hardylab/fourier_series.hpp"

namespace hardylab::detail {

/// Unnormalized forward DFT: X_k = sum_j x_j e^{-2 pi i jk/M}.
std::vector<cplx> fft_forward(std::span<const cplx> x);
/// Unnormalized inverse DFT: x_j = sum_k X_k e^{+2 pi i jk/M}.
std::vector<cplx> fft_inverse(std::span<const cplx> x);

bool is_power_of_two(long long m) noexcept;

} // namespace hardylab::detail
