// Thin RAII wrapper around FFTW complex 1-D transforms. Internal to the
// library; the physically meaningful transform conventions live in
// elements.cpp and wigner.cpp.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <fftw3.h>

namespace mzsim::detail {

class FftPlan {
 public:
  // sign: FFTW_FORWARD (kernel e^{-2pi i jk/n}) or FFTW_BACKWARD (e^{+2pi i jk/n}).
  // Transforms are unnormalized, exactly the bare DFT sums.
  FftPlan(std::size_t n, int sign);
  ~FftPlan();

  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  // in and out may alias; buffers are copied through the plan's own storage,
  // so one plan can serve many arrays of the same length.
  void execute(const std::complex<double>* in, std::complex<double>* out);

  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  fftw_complex* buf_;
  fftw_plan plan_;
};

}  // namespace mzsim::detail
