/*
 * Copyright 2026 The meyerbank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MEYERBANK_SYNTHESIS_HPP
#define MEYERBANK_SYNTHESIS_HPP

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "meyerbank/filter_bank.hpp"
#include "meyerbank/meyer_core.hpp"

// Time-domain filter extraction: h_n = (sqrt(N)/S) sum_j H(w_j) e^{i n w_j}
// over S uniform samples w_j = 2 pi j / S, followed by energy-controlled
// truncation of the index window.
namespace meyerbank {

// A frequency function handle tagged with the factor that fixes the
// sqrt(N) synthesis normalization.
struct FrequencyFunction {
  int factor = 1;
  int band = 0;
  std::function<std::complex<double>(double)> eval;

  static FrequencyFunction from_descriptor(const FrequencyDescriptor& desc);
  static FrequencyFunction classical2(ClassicalBand which);
  // Constant value; useful as a test stub (its Fourier series is a single
  // coefficient).
  static FrequencyFunction constant(double value, int factor);
};

inline constexpr int kDefaultSampleCount = 8192;
inline constexpr double kDefaultThreshold = 1e-10;

// samples must be a power of two >= 256; 0 < threshold < 1. Truncation
// repeatedly drops whichever end coefficient is smaller while the total
// discarded l2 mass stays within threshold^2 of the filter energy; the
// discarded mass is recorded as tail_energy.
Filter synthesize_filter(const FrequencyFunction& fn,
                         int samples = kDefaultSampleCount,
                         double threshold = kDefaultThreshold);

// Bands 0..N-1 of the factor-N design. N == 2 uses the classical two-band
// construction (real scaling filter plus the phase-shifted wavelet).
FilterBank synthesize_bank(int factor, int samples = kDefaultSampleCount,
                           double threshold = kDefaultThreshold);

// Composite factor-MN bank: band (k,l) has coefficients
// h^{kl}_n = sum_m g^l_m h^k_{n - m N} (outer filter g upsampled by the
// inner factor N), flattened to band index j = k*M + l (inner band major).
FilterBank compose_banks(const FilterBank& outer, const FilterBank& inner);

// (1/sqrt(N)) sum_n h_n e^{-i n w}
std::complex<double> eval_dtft(const Filter& f, double w);

// l2 mass of coefficients with |n| > radius (stored window only; the
// truncation tail recorded at synthesis time is separate metadata).
double tail_energy_outside(const Filter& f, int radius);

// (radius, tail mass) pairs on a doubling radius schedule from 0 past the
// filter reach. Demonstrates the slow decay of direct even-N designs.
std::vector<std::pair<int, double>> decay_profile(const Filter& f);

}  // namespace meyerbank

#endif  // MEYERBANK_SYNTHESIS_HPP
