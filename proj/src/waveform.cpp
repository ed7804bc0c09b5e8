#include "sentinel/waveform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sentinel/fft.hpp"

namespace sentinel {

void PrachNumerology::validate() const {
  if (n_zc < 1) throw std::invalid_argument("numerology: n_zc must be positive");
  if (fft_size <= n_zc) {
    throw std::invalid_argument("numerology: fft_size must exceed n_zc");
  }
  if (cp_len < 0 || gp_len < 0) {
    throw std::invalid_argument("numerology: cp_len/gp_len must be non-negative");
  }
  if (cp_len > fft_size) {
    throw std::invalid_argument("numerology: cp_len must not exceed fft_size");
  }
  if (subcarrier_offset < 0 || subcarrier_offset + n_zc > fft_size) {
    throw std::invalid_argument(
        "numerology: occupied bins [subcarrier_offset, subcarrier_offset + n_zc) "
        "must fit inside the FFT");
  }
}

Burst modulate(const Preamble& preamble, const PrachNumerology& num) {
  num.validate();
  if (preamble.sequence.n_zc != num.n_zc) {
    throw std::invalid_argument("modulate: preamble length does not match numerology");
  }

  const CpxVec spectrum = dft(preamble.sequence.data);
  CpxVec bins = CpxVec::Zero(num.fft_size);
  bins.segment(num.subcarrier_offset, num.n_zc) = spectrum;

  // idft carries 1/M; a ZC spectrum is flat with |X[k]|^2 = n_zc, so the raw
  // body has mean power (n_zc / fft_size)^2 and the unit-power scale is exact.
  CpxVec body = idft(bins) * (static_cast<double>(num.fft_size) / num.n_zc);

  Burst burst;
  burst.numerology = num;
  burst.true_v = preamble.preamble_index_v;
  burst.true_delay = 0;
  burst.samples = CpxVec::Zero(num.burst_len());
  burst.samples.segment(num.cp_len, num.fft_size) = body;
  burst.samples.head(num.cp_len) = body.tail(num.cp_len);
  // guard tail stays zero
  return burst;
}

Burst apply_delay(const Burst& burst, int d) {
  if (d < 0 || d > burst.numerology.gp_len) {
    throw std::invalid_argument("apply_delay: delay must be in [0, gp_len], got " +
                                std::to_string(d));
  }
  if (d == 0) return burst;
  Burst out = burst;
  const Eigen::Index n = burst.samples.size();
  out.samples.setZero();
  out.samples.tail(n - d) = burst.samples.head(n - d);
  out.true_delay = d;
  return out;
}

Burst apply_frequency_offset(const Burst& burst, double df_hz) {
  Burst out = burst;
  const double w = 2.0 * std::numbers::pi * df_hz / burst.numerology.sample_rate_hz();
  for (Eigen::Index n = 0; n < out.samples.size(); ++n) {
    out.samples[n] *= std::polar(1.0, w * static_cast<double>(n));
  }
  return out;
}

}  // namespace sentinel
