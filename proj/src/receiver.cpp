#include "sentinel/receiver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sentinel/fft.hpp"

namespace sentinel {

namespace {

// Ideal decimator: brick-wall lowpass matched to the retained band
// [0, M/decim) followed by sample dropping, with the 1/decim gain undone so
// surviving bins come out bit-comparable to the undecimated path.
CpxVec decimate_body(const CpxVec& body, int decim) {
  const int m = static_cast<int>(body.size());
  const int keep = m / decim;
  CpxVec spec = dft(body);
  spec.tail(m - keep).setZero();
  const CpxVec filtered = idft(spec);
  CpxVec out(keep);
  for (int i = 0; i < keep; ++i) out[i] = filtered[i * decim] * static_cast<double>(decim);
  return out;
}

}  // namespace

FrequencyObservation front_end(const RxObservation& rx, const PrachNumerology& num,
                               double df_correction_hz, int decim) {
  num.validate();
  if (decim < 1 || num.fft_size % decim != 0) {
    throw std::invalid_argument("front_end: fft_size must be divisible by decim");
  }
  if (num.subcarrier_offset + num.n_zc > num.fft_size / decim) {
    throw std::invalid_argument(
        "front_end: decimation would alias the occupied bins");
  }
  if (rx.per_antenna.empty()) throw MalformedInputError("front_end: no antennas");

  const double w = -2.0 * std::numbers::pi * df_correction_hz / num.sample_rate_hz();

  FrequencyObservation obs;
  obs.bins.reserve(rx.per_antenna.size());
  for (const CpxVec& buf : rx.per_antenna) {
    if (buf.size() < num.burst_len()) {
      throw MalformedInputError("front_end: buffer shorter than the burst length");
    }
    CpxVec body = buf.segment(num.cp_len, num.fft_size);
    if (df_correction_hz != 0.0) {
      for (Eigen::Index n = 0; n < body.size(); ++n) {
        // sample index counted from the start of the received buffer
        body[n] *= std::polar(1.0, w * static_cast<double>(num.cp_len + n));
      }
    }
    if (decim > 1) body = decimate_body(body, decim);
    const CpxVec spec = dft(body);
    obs.bins.push_back(spec.segment(num.subcarrier_offset, num.n_zc));
  }
  return obs;
}

RealVec correlate(const FrequencyObservation& obs, const ZcSequence& root) {
  const int n = root.n_zc;
  if (obs.bins.empty()) throw std::invalid_argument("correlate: no antennas");
  for (const CpxVec& b : obs.bins) {
    if (b.size() != n) throw std::invalid_argument("correlate: bin count != n_zc");
  }

  const CpxVec root_spec_conj = dft(root.data).conjugate();
  RealVec raw = RealVec::Zero(n);
  for (const CpxVec& bins : obs.bins) {
    const CpxVec corr = idft(CpxVec(bins.cwiseProduct(root_spec_conj)));
    raw += corr.cwiseAbs2();
  }

  // Window-major re-indexing (see header): shift windows ascend and timing
  // advance grows to the right. Unused lags keep their order at the tail.
  const int n_cs = 13;  // re-indexing granularity is fixed by detect()'s windows
  const int n_win = std::min(64, n / n_cs);
  RealVec pdp(n);
  int i = 0;
  for (int w = 0; w < n_win; ++w) {
    for (int t = 0; t < n_cs && i < n; ++t, ++i) {
      pdp[w * n_cs + t] = raw[((t - w * n_cs) % n + n) % n];
    }
  }
  for (int r = 0; i < n; ++r, ++i) pdp[i] = raw[n_cs + r];
  return pdp;
}

DetectionResult detect(const RealVec& pdp, int n_cs, double threshold_factor) {
  if (n_cs < 1) throw std::invalid_argument("detect: n_cs must be >= 1");
  const int n = static_cast<int>(pdp.size());
  const int n_win = std::min(64, n / n_cs);
  if (n_win < 1) throw std::invalid_argument("detect: n_cs too large for the profile");

  std::vector<double> sorted(pdp.data(), pdp.data() + n);
  std::nth_element(sorted.begin(), sorted.begin() + n / 2, sorted.end());
  const double floor = sorted[n / 2];

  int best = 0;
  for (int i = 1; i < n_win * n_cs; ++i) {
    if (pdp[i] > pdp[best]) best = i;
  }

  DetectionResult res;
  res.noise_floor = floor;
  res.threshold = threshold_factor * floor;
  res.peak_metric = pdp[best];
  res.detected = res.peak_metric > res.threshold;
  if (res.detected) {
    res.rapid_v = best / n_cs;
    res.timing_offset_samples = best % n_cs;
  }
  return res;
}

int timing_to_burst_samples(int timing_corr_samples, const PrachNumerology& num) {
  return static_cast<int>(std::llround(static_cast<double>(timing_corr_samples) *
                                       num.fft_size / num.n_zc));
}

}  // namespace sentinel
