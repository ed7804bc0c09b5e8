#pragma once

#include <optional>
#include <vector>

#include "sentinel/channel.hpp"
#include "sentinel/common.hpp"
#include "sentinel/zc.hpp"

namespace sentinel {

// Demapped occupied bins, one length-n_zc buffer per antenna.
struct FrequencyObservation {
  std::vector<CpxVec> bins;
};

struct DetectionResult {
  bool detected = false;
  std::optional<int> rapid_v;
  // Offset of the peak from its window start, in correlation samples
  // (n_zc-rate). Multiply by fft_size / n_zc for burst-rate samples.
  std::optional<int> timing_offset_samples;
  double peak_metric = 0.0;
  double noise_floor = 0.0;
  double threshold = 0.0;
};

// Steps i-v: strip CP and guard, apply the frequency correction, decimate
// (ideal cyclic lowpass, pass-through at decim = 1), FFT the body and demap
// the occupied bins. fft_size must be divisible by decim and the occupied
// block must survive the decimated bandwidth.
FrequencyObservation front_end(const RxObservation& rx, const PrachNumerology& num,
                               double df_correction_hz, int decim);

// Steps vi-ix input: multiply by the conjugated root spectrum, inverse-DFT
// to the cyclic-correlation domain, combine antennas non-coherently.
//
// The raw cyclic correlation places the response of preamble shift cv at lag
// n_zc - cv while a propagation delay moves it forward; the returned profile
// is re-indexed per shift window so that index = cv + delay, i.e. window v
// starts at v * n_cs and timing advance grows to the right. The mapping is
// out[w * n_cs + t] = raw[(t - w * n_cs) mod n_zc]; n_cs must match the
// value later given to detect().
RealVec correlate(const FrequencyObservation& obs, const ZcSequence& root,
                  int n_cs = 13);

// Step ix: split the profile into 64 shift windows, take the strongest
// sample, compare against threshold_factor * median(pdp).
DetectionResult detect(const RealVec& pdp, int n_cs, double threshold_factor = 13.0);

// Correlation-sample timing converted to burst-rate samples.
int timing_to_burst_samples(int timing_corr_samples, const PrachNumerology& num);

}  // namespace sentinel
