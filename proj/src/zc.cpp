#include "sentinel/zc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sentinel {

bool is_prime(int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (int d = 3; static_cast<long long>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

ZcSequence zc_root(int u, int n_zc) {
  if (!is_prime(n_zc)) {
    throw std::invalid_argument("zc_root: n_zc must be prime, got " +
                                std::to_string(n_zc));
  }
  if (u < 1 || u > n_zc - 1) {
    throw std::invalid_argument("zc_root: root u must be in [1, n_zc-1], got " +
                                std::to_string(u));
  }
  ZcSequence seq;
  seq.root_u = u;
  seq.n_zc = n_zc;
  seq.data.resize(n_zc);
  // The phase is pi * u * n * (n+1) / n_zc modulo 2*pi. Reducing the exact
  // integer product modulo 2*n_zc first keeps the argument passed to the
  // trig functions small, so no precision is lost at large n.
  const std::int64_t two_n = 2LL * n_zc;
  for (int n = 0; n < n_zc; ++n) {
    const std::int64_t prod =
        (static_cast<std::int64_t>(u) * ((static_cast<std::int64_t>(n) * (n + 1)) % two_n)) % two_n;
    const double phase = -std::numbers::pi * static_cast<double>(prod) /
                         static_cast<double>(n_zc);
    seq.data[n] = std::polar(1.0, phase);
  }
  return seq;
}

ZcSequence cyclic_shift(const ZcSequence& seq, int cv) {
  const int n = seq.n_zc;
  const int shift = ((cv % n) + n) % n;
  ZcSequence out;
  out.root_u = seq.root_u;
  out.n_zc = n;
  out.data.resize(n);
  for (int i = 0; i < n; ++i) {
    out.data[i] = seq.data[(i + shift) % n];
  }
  return out;
}

Preamble preamble_from_index(int u, int v, int n_cs, int n_zc) {
  if (v < 0) throw std::invalid_argument("preamble_from_index: v must be >= 0");
  if (n_cs < 1) throw std::invalid_argument("preamble_from_index: n_cs must be >= 1");
  const long long cv = static_cast<long long>(v) * n_cs;
  if (cv >= n_zc) {
    throw IndexExhaustedError(
        "preamble_from_index: v * n_cs = " + std::to_string(cv) +
        " exceeds the single-root shift budget (n_zc = " + std::to_string(n_zc) + ")");
  }
  Preamble p;
  p.sequence = cyclic_shift(zc_root(u, n_zc), static_cast<int>(cv));
  p.cyclic_shift_cv = static_cast<int>(cv);
  p.preamble_index_v = v;
  return p;
}

}  // namespace sentinel
