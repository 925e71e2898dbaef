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

#ifndef MEYERBANK_TRANSFORM_HPP
#define MEYERBANK_TRANSFORM_HPP

#include <complex>
#include <vector>

#include "meyerbank/filter_bank.hpp"

// N-band analysis and synthesis with decimation. Boundary handling is
// circular: signals are treated as one period of an L-periodic sequence,
// and filters longer than the signal are folded modulo L, which keeps
// perfect reconstruction exact on the circle.
namespace meyerbank {

using Signal = std::vector<std::complex<double>>;

// One decomposition level: band k holds a^k_m = sum_n conj(h^k_n)
// x_{(n + N m) mod L}, m = 0 .. L/N - 1.
struct CoefficientSet {
  int factor = 0;
  std::vector<std::vector<std::complex<double>>> bands;

  std::size_t signal_length() const {
    return bands.empty() ? 0
                         : static_cast<std::size_t>(factor) * bands[0].size();
  }
};

// Requires L >= 1 and L divisible by the bank factor (the error message
// names the padded length that would work).
CoefficientSet decompose(const Signal& x, const FilterBank& bank);

// x_n = sum_k sum_m h^k_{n - N m} a^k_m on the circle of length
// factor * band length.
Signal reconstruct(const CoefficientSet& coeffs, const FilterBank& bank);

// Frequency-domain route to the same coefficients: per band,
// A^k[t] = (1/N) sum_s X[t + s L/N] conj(Hk[t + s L/N]) followed by an
// inverse DFT of length L/N, where X is the signal DFT and Hk the
// unnormalized filter transfer at the L-th roots of unity. Serves as an
// independent oracle for decompose.
CoefficientSet decompose_modulation(const Signal& x, const FilterBank& bank);

// Two-stage decomposition: first_stage splits x into N bands, then
// second_stage splits every band. Output band order matches
// decompose(x, compose_banks(second_stage, first_stage)): flattened index
// k*M + l for first-stage band k and second-stage band l.
CoefficientSet cascade_decompose(const Signal& x,
                                 const FilterBank& first_stage,
                                 const FilterBank& second_stage);

// Pyramid from iterating the split on band 0. details[j] holds bands
// 1..N-1 of level j (level 0 is the finest).
struct MultilevelDecomposition {
  int factor = 0;
  int levels = 0;
  std::size_t signal_length = 0;
  std::vector<std::vector<std::vector<std::complex<double>>>> details;
  std::vector<std::complex<double>> approximation;
};

// Requires L divisible by factor^levels; the error names the maximal
// feasible level count.
MultilevelDecomposition multilevel_decompose(const Signal& x,
                                             const FilterBank& bank,
                                             int levels);

Signal multilevel_reconstruct(const MultilevelDecomposition& pyramid,
                              const FilterBank& bank);

// Convenience real view: real parts for even bands, magnitudes for odd
// bands. Odd-band coefficients are (close to) purely imaginary times the
// signal content, so the magnitude view discards a fixed phase; it is
// lossy and meant for display only.
std::vector<std::vector<double>> real_view(const CoefficientSet& coeffs);

}  // namespace meyerbank

#endif  // MEYERBANK_TRANSFORM_HPP
