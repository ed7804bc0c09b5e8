#pragma once

#include <cstdint>
#include <vector>

#include "sentinel/common.hpp"
#include "sentinel/waveform.hpp"

namespace sentinel {

enum class MimoCorrelation { kLow, kMedium, kHigh };

// Tapped-delay-line Rayleigh channel. Defaults to the standard 9-tap
// extended-typical-urban profile with 70 Hz Doppler and two uncorrelated
// receive antennas.
struct ChannelConfig {
  int n_rx = 2;
  double doppler_hz = 70.0;
  std::vector<double> tap_delays_ns = {0, 50, 120, 200, 230, 500, 1600, 2300, 5000};
  std::vector<double> tap_powers_db = {-1.0, -1.0, -1.0, 0.0, 0.0, 0.0, -3.0, -5.0, -7.0};
  MimoCorrelation mimo_correlation = MimoCorrelation::kLow;
  int n_sinusoids = 16;
  std::uint64_t seed = 0;
  double sample_rate_hz = 1250.0 * 1024;

  int n_taps() const { return static_cast<int>(tap_delays_ns.size()); }
  void validate() const;
};

// Drawn complex tap-gain trajectories: tap_gains[antenna](tap, t). Tap powers
// are normalized so the summed mean gain is 1 (0 dB).
struct ChannelRealization {
  std::vector<Eigen::MatrixXcd> tap_gains;
  ChannelConfig config;
  int n_samples = 0;
};

// Power measured over the OFDM body [cp_len, cp_len + fft_size), averaged
// across antennas. The reference point for both SNR and interference ratios.
double body_mean_power(const std::vector<CpxVec>& buffers, const PrachNumerology& num);

// Sum-of-sinusoids Rayleigh generator (exact-Doppler-spread construction):
// per tap and antenna, I and Q are n_sinusoids cosines at deterministically
// spaced Doppler frequencies f_d*cos(alpha_n) with seed-derived phases.
// Distinct (antenna, tap) pairs get rotated angle sets plus independent
// phases; antennas are mixed by the square root of the configured
// correlation matrix (low = identity).
ChannelRealization draw_fading(const ChannelConfig& cfg, int n_samples,
                               std::uint64_t rng_stream);

// out_a(t) = sum_taps g_a,tap(t) * in(t - d_tap), d_tap from the delay
// profile at the numerology's sample rate. Output length equals input
// length; echoes land inside the guard region.
std::vector<CpxVec> apply_channel(const CpxVec& burst, const ChannelRealization& real,
                                  const PrachNumerology& num);

// rx + alpha * interferer, alpha set so the interferer body power sits
// rel_power_db below ref_power (default: rx body power). rel_power_db
// <= -300 is the documented "off" sentinel.
std::vector<CpxVec> add_interference(const std::vector<CpxVec>& rx,
                                     const std::vector<CpxVec>& interferer,
                                     double rel_power_db, const PrachNumerology& num,
                                     double ref_power = -1.0);

// Circularly symmetric white noise at the requested SNR relative to
// ref_power (default: rx body power). snr_db >= +300 is the "off" sentinel.
std::vector<CpxVec> add_awgn(const std::vector<CpxVec>& rx, double snr_db,
                             std::uint64_t seed, const PrachNumerology& num,
                             double ref_power = -1.0);

// One received occasion with full generation provenance.
struct RxObservation {
  std::vector<CpxVec> per_antenna;
  double snr_db = 0.0;
  double interf_power_db = -300.0;  // off sentinel when clean
  std::uint64_t seed = 0;
  bool label_interference = false;
};

}  // namespace sentinel
