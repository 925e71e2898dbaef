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

#ifndef MEYERBANK_VERIFY_HPP
#define MEYERBANK_VERIFY_HPP

#include <complex>
#include <vector>

#include "meyerbank/filter_bank.hpp"

// Orthogonality certification. The bank is orthogonal iff its modulation
// matrix M(w), entry (k,s) = H^k(w - 2 pi s / N), is unitary for all w.
namespace meyerbank {

struct VerificationReport {
  int factor = 0;
  int grid_size = 0;
  double max_unitarity_defect = 0.0;
  // Row diagnostics mirroring the orthogonality proof structure: the
  // diagonal of M M^H minus one, and the first off-diagonal (only
  // adjacent bands overlap in frequency, so these entries carry all of
  // the cancellation burden).
  std::vector<double> per_row_norm_defect;                 // size N
  std::vector<double> adjacent_row_orthogonality_defect;   // size N-1
  bool pass = false;
  double tolerance = 0.0;
};

// Row-major N x N matrix with entry (k,s) = eval_dtft(filters[k],
// w - 2 pi s / N).
std::vector<std::complex<double>> modulation_matrix(const FilterBank& bank,
                                                    double w);

// Max-entry defect of M(w) M^H(w) - I over a uniform grid. Grid points
// are offset by half a step from the band edges so the measure-zero jump
// of even-N last bands is never sampled exactly. grid_size >= 64.
VerificationReport verify_bank(const FilterBank& bank, int grid_size = 1024,
                               double tolerance = 1e-6);

}  // namespace meyerbank

#endif  // MEYERBANK_VERIFY_HPP
