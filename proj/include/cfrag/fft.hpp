#pragma once

#include <complex>
#include <span>
#include <vector>

namespace cfrag::fft {

using cvec = std::vector<std::complex<double>>;

// Unnormalized transforms: forward is sum_j x_j e^{-2 pi i jk/N}, backward
// uses e^{+2 pi i jk/N}. Safe to call concurrently.
cvec forward(std::span<const std::complex<double>> x);
cvec backward(std::span<const std::complex<double>> x);

}  // namespace cfrag::fft
