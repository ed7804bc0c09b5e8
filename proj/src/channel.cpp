#include "sentinel/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sentinel/rng.hpp"

namespace sentinel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double correlation_coefficient(MimoCorrelation c) {
  switch (c) {
    case MimoCorrelation::kLow: return 0.0;
    case MimoCorrelation::kMedium: return 0.3;
    case MimoCorrelation::kHigh: return 0.9;
  }
  return 0.0;
}

// sqrt of the antenna correlation matrix R_ij = rho^|i-j|.
Eigen::MatrixXd antenna_mixing(int n_rx, double rho) {
  Eigen::MatrixXd r(n_rx, n_rx);
  for (int i = 0; i < n_rx; ++i) {
    for (int j = 0; j < n_rx; ++j) {
      r(i, j) = std::pow(rho, std::abs(i - j));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r);
  return es.operatorSqrt();
}

}  // namespace

void ChannelConfig::validate() const {
  if (n_rx < 1) throw InvalidConfigError("channel: n_rx must be >= 1");
  if (tap_delays_ns.size() != tap_powers_db.size()) {
    throw InvalidConfigError("channel: tap_delays_ns and tap_powers_db lengths differ");
  }
  if (tap_delays_ns.empty()) throw InvalidConfigError("channel: tap profile is empty");
  if (n_sinusoids < 1) throw InvalidConfigError("channel: n_sinusoids must be >= 1");
  if (doppler_hz < 0) throw InvalidConfigError("channel: doppler_hz must be >= 0");
  if (sample_rate_hz <= 0) throw InvalidConfigError("channel: sample_rate_hz must be > 0");
}

double body_mean_power(const std::vector<CpxVec>& buffers, const PrachNumerology& num) {
  if (buffers.empty()) throw std::invalid_argument("body_mean_power: no antennas");
  double acc = 0.0;
  for (const CpxVec& b : buffers) {
    if (b.size() < num.cp_len + num.fft_size) {
      throw std::invalid_argument("body_mean_power: buffer shorter than CP + body");
    }
    acc += b.segment(num.cp_len, num.fft_size).squaredNorm() / num.fft_size;
  }
  return acc / static_cast<double>(buffers.size());
}

ChannelRealization draw_fading(const ChannelConfig& cfg, int n_samples,
                               std::uint64_t rng_stream) {
  cfg.validate();
  if (n_samples < 1) throw std::invalid_argument("draw_fading: n_samples must be >= 1");

  const int n_taps = cfg.n_taps();
  const int n_sin = cfg.n_sinusoids;
  const int n_waveforms = cfg.n_rx * n_taps;

  // Normalize the profile to unit total mean gain.
  Eigen::VectorXd tap_power(n_taps);
  for (int t = 0; t < n_taps; ++t) tap_power[t] = std::pow(10.0, cfg.tap_powers_db[t] / 10.0);
  tap_power /= tap_power.sum();

  const Eigen::ArrayXd time =
      Eigen::ArrayXd::LinSpaced(n_samples, 0.0, static_cast<double>(n_samples - 1)) /
      cfg.sample_rate_hz;

  const std::uint64_t base = derive_seed(cfg.seed, rng_stream);

  ChannelRealization real;
  real.config = cfg;
  real.n_samples = n_samples;
  real.tap_gains.assign(cfg.n_rx, Eigen::MatrixXcd(n_taps, n_samples));

  for (int ant = 0; ant < cfg.n_rx; ++ant) {
    for (int tap = 0; tap < n_taps; ++tap) {
      const int k = ant * n_taps + tap;
      // Rotating the arrival-angle grid per waveform and per quadrature
      // component keeps every frequency set distinct, so I/Q components and
      // different (antenna, tap) trajectories stay uncorrelated.
      const double rot = std::numbers::pi / (4.0 * n_sin) *
                         (static_cast<double>(k + 1) / (n_waveforms + 2));
      Rng rng(derive_seed(base, static_cast<std::uint64_t>(k)));

      Eigen::ArrayXd comp[2];
      for (int iq = 0; iq < 2; ++iq) {
        comp[iq].setZero(n_samples);
        const double sign = (iq == 0) ? 1.0 : -1.0;
        for (int s = 0; s < n_sin; ++s) {
          const double alpha =
              std::numbers::pi / (2.0 * n_sin) * (s + 0.5) + sign * rot;
          const double freq = cfg.doppler_hz * std::cos(alpha);
          const double phase = rng.uniform(0.0, kTwoPi);
          comp[iq] += (time * (kTwoPi * freq) + phase).cos();
        }
        comp[iq] *= std::sqrt(1.0 / n_sin);  // component variance 1/2
      }
      const double amp = std::sqrt(tap_power[tap]);
      real.tap_gains[ant].row(tap).real() = (comp[0] * amp).matrix();
      real.tap_gains[ant].row(tap).imag() = (comp[1] * amp).matrix();
    }
  }

  const double rho = correlation_coefficient(cfg.mimo_correlation);
  if (rho != 0.0 && cfg.n_rx > 1) {
    const Eigen::MatrixXd mix = antenna_mixing(cfg.n_rx, rho);
    std::vector<Eigen::MatrixXcd> mixed(cfg.n_rx,
                                        Eigen::MatrixXcd::Zero(n_taps, n_samples));
    for (int a = 0; a < cfg.n_rx; ++a) {
      for (int b = 0; b < cfg.n_rx; ++b) {
        mixed[a] += mix(a, b) * real.tap_gains[b];
      }
    }
    real.tap_gains = std::move(mixed);
  }
  return real;
}

std::vector<CpxVec> apply_channel(const CpxVec& burst, const ChannelRealization& real,
                                  const PrachNumerology& num) {
  const int len = static_cast<int>(burst.size());
  if (real.n_samples < len) {
    throw std::invalid_argument("apply_channel: realization shorter than burst");
  }
  const ChannelConfig& cfg = real.config;
  const int n_taps = cfg.n_taps();

  std::vector<int> delay(n_taps);
  for (int t = 0; t < n_taps; ++t) {
    delay[t] = static_cast<int>(std::llround(cfg.tap_delays_ns[t] * 1e-9 *
                                             num.sample_rate_hz()));
    if (delay[t] > num.gp_len) {
      throw InvalidConfigError("apply_channel: tap delay " +
                               std::to_string(cfg.tap_delays_ns[t]) +
                               " ns exceeds the guard period");
    }
  }

  std::vector<CpxVec> out(real.tap_gains.size());
  for (std::size_t ant = 0; ant < real.tap_gains.size(); ++ant) {
    out[ant] = CpxVec::Zero(len);
    for (int tap = 0; tap < n_taps; ++tap) {
      const int d = delay[tap];
      out[ant].tail(len - d).array() +=
          real.tap_gains[ant].row(tap).segment(d, len - d).transpose().array() *
          burst.head(len - d).array();
    }
  }
  return out;
}

std::vector<CpxVec> add_interference(const std::vector<CpxVec>& rx,
                                     const std::vector<CpxVec>& interferer,
                                     double rel_power_db, const PrachNumerology& num,
                                     double ref_power) {
  if (rx.size() != interferer.size()) {
    throw std::invalid_argument("add_interference: antenna count mismatch");
  }
  for (std::size_t a = 0; a < rx.size(); ++a) {
    if (rx[a].size() != interferer[a].size()) {
      throw std::invalid_argument("add_interference: buffer length mismatch");
    }
  }
  if (rel_power_db <= -300.0) return rx;

  const double p_sig = ref_power > 0 ? ref_power : body_mean_power(rx, num);
  const double p_int = body_mean_power(interferer, num);
  if (p_int <= 0.0) return rx;
  const double alpha = std::sqrt(p_sig / p_int * std::pow(10.0, rel_power_db / 10.0));

  std::vector<CpxVec> out(rx.size());
  for (std::size_t a = 0; a < rx.size(); ++a) out[a] = rx[a] + alpha * interferer[a];
  return out;
}

std::vector<CpxVec> add_awgn(const std::vector<CpxVec>& rx, double snr_db,
                             std::uint64_t seed, const PrachNumerology& num,
                             double ref_power) {
  if (snr_db >= 300.0) return rx;
  const double p_sig = ref_power > 0 ? ref_power : body_mean_power(rx, num);
  const double sigma = std::sqrt(p_sig * std::pow(10.0, -snr_db / 10.0));

  std::vector<CpxVec> out(rx.size());
  for (std::size_t a = 0; a < rx.size(); ++a) {
    Rng rng(derive_seed(seed, 0xA031 + a));
    out[a] = rx[a];
    for (Eigen::Index n = 0; n < out[a].size(); ++n) {
      out[a][n] += sigma * rng.cgaussian();
    }
  }
  return out;
}

}  // namespace sentinel
