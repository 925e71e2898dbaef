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

#ifndef MEYERBANK_FILTER_BANK_HPP
#define MEYERBANK_FILTER_BANK_HPP

#include <complex>
#include <string>
#include <vector>

namespace meyerbank {

// One band's coefficient sequence {h_n}. coeffs[j] is the coefficient at
// time index n = offset + j. Filters are stored complex throughout: even
// bands come out real, odd bands purely imaginary, and the two-band
// wavelet genuinely complex, so complex storage is the one convention
// that fits all constructions.
struct Filter {
  std::vector<std::complex<double>> coeffs;
  int offset = 0;
  int factor = 1;  // N of the 1/sqrt(N) transfer normalization
  int band = 0;
  double tail_energy = 0.0;  // l2 mass discarded by truncation
  int sample_count = 0;      // DFT size used by synthesis (0 if unknown)

  int min_index() const { return offset; }
  int max_index() const { return offset + static_cast<int>(coeffs.size()) - 1; }

  // Coefficient at time index n; zero outside the stored window.
  std::complex<double> at(int n) const {
    const long j = static_cast<long>(n) - offset;
    if (j < 0 || j >= static_cast<long>(coeffs.size())) return {0.0, 0.0};
    return coeffs[static_cast<std::size_t>(j)];
  }

  double energy() const;
};

struct FilterBank {
  int factor = 0;
  std::vector<Filter> filters;  // band order 0 .. factor-1
  std::string provenance;       // "direct(N)", "composite(M,N)", "classical2"
};

std::string direct_provenance(int factor);
std::string composite_provenance(int outer_factor, int inner_factor);
std::string classical2_provenance();

// Throws std::invalid_argument unless the bank has factor >= 2 and exactly
// factor filters.
void validate_bank(const FilterBank& bank);

}  // namespace meyerbank

#endif  // MEYERBANK_FILTER_BANK_HPP
