#include "sentinel/fft.hpp"

#include <unsupported/Eigen/FFT>

namespace sentinel {

namespace {
// Eigen::FFT caches one plan per transform length, so a thread-local
// instance amortizes planning across calls.
Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}
}  // namespace

CpxVec dft(const CpxVec& x) {
  CpxVec out;
  engine().fwd(out, x);
  return out;
}

CpxVec idft(const CpxVec& x) {
  CpxVec out;
  engine().inv(out, x);
  return out;
}

}  // namespace sentinel
