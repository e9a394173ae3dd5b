#pragma once

// Thin wrappers over FFTW for the uniform circle grids used throughout.

#include <complex>
#include <span>
#include <vector>

namespace hullab::detail {

/// X_k = sum_j x_j e^{-2 pi i j k / M}, k = 0 .. M/2 (real input).
std::vector<std::complex<double>> real_forward_dft(std::span<const double> samples);

/// x_j = sum_k X_k e^{+2 pi i j k / M} (unnormalized backward transform).
std::vector<std::complex<double>> backward_dft(std::span<const std::complex<double>> spectrum);

}  // namespace hullab::detail
