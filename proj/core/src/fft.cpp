#include "hmdd/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>

namespace hmdd {
namespace {

std::mutex g_plan_mutex;

fftw_plan plan_for(int n) {
  // Plans are created once per size against scratch buffers and reused via
  // fftw_execute_dft on caller buffers (the new-array execute interface).
  static std::map<int, fftw_plan>* plans = new std::map<int, fftw_plan>();
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = plans->find(n);
  if (it != plans->end()) return it->second;
  fftw_complex* scratch = fftw_alloc_complex(static_cast<size_t>(n));
  fftw_plan p = fftw_plan_dft_1d(n, scratch, scratch, FFTW_FORWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(scratch);
  (*plans)[n] = p;
  return p;
}

}  // namespace

void fft_forward(const std::complex<double>* in, std::complex<double>* out, int n) {
  if (n <= 0) return;
  if (n == 1) {
    out[0] = in[0];
    return;
  }
  fftw_plan p = plan_for(n);
  // FFTW's execute_dft takes non-const input even for out-of-place plans.
  auto* fin = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in));
  auto* fout = reinterpret_cast<fftw_complex*>(out);
  if (fin == fout) {
    std::vector<std::complex<double>> tmp(in, in + n);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(tmp.data()), fout);
  } else {
    fftw_execute_dft(p, fin, fout);
  }
}

std::vector<std::complex<double>> fft_forward(const std::vector<std::complex<double>>& in) {
  std::vector<std::complex<double>> out(in.size());
  fft_forward(in.data(), out.data(), static_cast<int>(in.size()));
  return out;
}

namespace {
template <typename T>
void shift_impl(T* data, int n) {
  // After the shift, index n/2 holds the zero-frequency bin.
  int half = n / 2;
  if (n % 2 == 0) {
    for (int k = 0; k < half; ++k) std::swap(data[k], data[k + half]);
  } else {
    std::rotate(data, data + half + 1, data + n);
  }
}
}  // namespace

void fftshift_inplace(std::complex<double>* data, int n) { shift_impl(data, n); }
void fftshift_inplace(double* data, int n) { shift_impl(data, n); }

}  // namespace hmdd
