#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

namespace hullab::detail {
namespace {

// FFTW planning is not thread safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::vector<std::complex<double>> real_forward_dft(std::span<const double> samples) {
  const int n = static_cast<int>(samples.size());
  std::vector<double> in(samples.begin(), samples.end());
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n / 2 + 1));
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(n, in.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<std::complex<double>> backward_dft(std::span<const std::complex<double>> spectrum) {
  const int n = static_cast<int>(spectrum.size());
  std::vector<std::complex<double>> in(spectrum.begin(), spectrum.end());
  std::vector<std::complex<double>> out(spectrum.size());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                            reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace hullab::detail
