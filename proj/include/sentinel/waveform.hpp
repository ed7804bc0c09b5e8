#pragma once

#include "sentinel/common.hpp"
#include "sentinel/zc.hpp"

namespace sentinel {

// Desk-scale long-preamble numerology: 1024-point FFT over 839 occupied
// subcarriers at 1.25 kHz spacing (1.28 MHz sample rate), with the format-0
// cyclic prefix / guard period scaled proportionally from the native rate.
struct PrachNumerology {
  int n_zc = 839;
  int fft_size = 1024;
  int cp_len = 132;
  int gp_len = 124;
  int subcarrier_offset = 12;  // first occupied bin

  int burst_len() const { return cp_len + fft_size + gp_len; }
  double sample_rate_hz() const { return 1250.0 * fft_size; }
  void validate() const;
};

// One transmitted occasion: [cyclic prefix | OFDM body | guard zeros].
struct Burst {
  CpxVec samples;
  PrachNumerology numerology;
  int true_v = 0;
  int true_delay = 0;  // burst-rate samples
};

// Map the preamble's DFT onto the occupied bins, inverse-transform, prepend
// the CP and append the guard. The body is scaled to unit mean per-sample
// power (the exact factor is fft_size / n_zc for any ZC input).
Burst modulate(const Preamble& preamble, const PrachNumerology& num);

// Right-shift by d samples, zero-filling the head. Delays beyond the guard
// period are rejected.
Burst apply_delay(const Burst& burst, int d);

// samples[n] *= exp(j 2 pi df n / fs)
Burst apply_frequency_offset(const Burst& burst, double df_hz);

}  // namespace sentinel
