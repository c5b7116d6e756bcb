#pragma once

#include <complex>
#include <vector>

namespace hmdd {

// Forward DFT, out[k] = sum_n in[n] * exp(-2*pi*i*k*n/N). Arbitrary N.
// Thread-safe; plans are cached per size behind a mutex, execution runs
// concurrently on caller-owned buffers.
void fft_forward(const std::complex<double>* in, std::complex<double>* out, int n);

std::vector<std::complex<double>> fft_forward(const std::vector<std::complex<double>>& in);

// Rotates so the zero-frequency bin lands at index n/2.
void fftshift_inplace(std::complex<double>* data, int n);
void fftshift_inplace(double* data, int n);

}  // namespace hmdd
