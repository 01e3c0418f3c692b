#include "fft_backend.hpp"

#include <cstring>
#include <stdexcept>

namespace mzsim::detail {

FftPlan::FftPlan(std::size_t n, int sign) : n_(n) {
  buf_ = fftw_alloc_complex(n);
  if (buf_ == nullptr) {
    throw std::bad_alloc();
  }
  // FFTW_ESTIMATE keeps plan selection deterministic (no runtime measuring),
  // which the byte-identical-outputs contract relies on.
  plan_ = fftw_plan_dft_1d(static_cast<int>(n), buf_, buf_, sign, FFTW_ESTIMATE);
  if (plan_ == nullptr) {
    fftw_free(buf_);
    throw std::runtime_error("fftw_plan_dft_1d failed");
  }
}

FftPlan::~FftPlan() {
  fftw_destroy_plan(plan_);
  fftw_free(buf_);
}

void FftPlan::execute(const std::complex<double>* in, std::complex<double>* out) {
  // std::complex<double> is layout-compatible with fftw_complex.
  std::memcpy(static_cast<void*>(buf_), static_cast<const void*>(in),
              n_ * sizeof(fftw_complex));
  fftw_execute(plan_);
  std::memcpy(static_cast<void*>(out), static_cast<const void*>(buf_),
              n_ * sizeof(fftw_complex));
}

}  // namespace mzsim::detail
