#pragma once

#include "sentinel/common.hpp"

namespace sentinel {

// Forward DFT, X[k] = sum_n x[n] exp(-j 2 pi k n / N). Any length, including
// primes.
CpxVec dft(const CpxVec& x);

// Inverse DFT with 1/N scaling, so idft(dft(x)) == x.
CpxVec idft(const CpxVec& x);

}  // namespace sentinel
