#pragma once

#include "sentinel/common.hpp"

namespace sentinel {

// Root sequence x_u of prime length n_zc: constant amplitude, zero cyclic
// autocorrelation at every nonzero lag.
struct ZcSequence {
  CpxVec data;
  int root_u = 0;
  int n_zc = 0;
};

// A cyclically shifted root. cyclic_shift_cv is the shift in sequence
// samples, preamble_index_v the identifier it encodes (cv = v * n_cs).
struct Preamble {
  ZcSequence sequence;
  int cyclic_shift_cv = 0;
  int preamble_index_v = 0;
};

bool is_prime(int n);

// x_u(n) = exp(-j pi u n (n+1) / n_zc), 0 <= n < n_zc.
// Requires prime n_zc and 1 <= u <= n_zc - 1.
ZcSequence zc_root(int u, int n_zc = 839);

// out[n] = seq[(n + cv) mod n_zc]; cv is reduced mod n_zc.
ZcSequence cyclic_shift(const ZcSequence& seq, int cv);

// Preamble v from a single root: cyclic_shift(zc_root(u), v * n_cs).
// Throws IndexExhaustedError when v * n_cs >= n_zc.
Preamble preamble_from_index(int u, int v, int n_cs, int n_zc = 839);

}  // namespace sentinel
