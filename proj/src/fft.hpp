#pragma once

#include <complex>
#include <span>

namespace muskat::fft {

// Unnormalized real transforms of length n; thread-safe after plan creation.
// forward:  out[k] = sum_j in[j] e^{-2 pi i jk/n}, k = 0..n/2
// backward: out[j] = sum_k c_k e^{+2 pi i jk/n} for the Hermitian extension of in
void forward(std::span<const double> in, std::span<std::complex<double>> out);
void backward(std::span<const std::complex<double>> in, std::span<double> out);

}  // namespace muskat::fft
