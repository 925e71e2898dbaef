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

#include "meyerbank/verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "meyerbank/kernels.hpp"
#include "meyerbank/synthesis.hpp"

namespace meyerbank {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

std::vector<std::complex<double>> modulation_matrix(const FilterBank& bank,
                                                    double w) {
  validate_bank(bank);
  const int N = bank.factor;
  std::vector<std::complex<double>> m(static_cast<std::size_t>(N) * N);
  for (int k = 0; k < N; ++k) {
    for (int s = 0; s < N; ++s) {
      m[static_cast<std::size_t>(k) * N + s] =
          eval_dtft(bank.filters[static_cast<std::size_t>(k)],
                    w - kTwoPi * s / N);
    }
  }
  return m;
}

VerificationReport verify_bank(const FilterBank& bank, int grid_size,
                               double tolerance) {
  validate_bank(bank);
  if (grid_size < 64) {
    throw std::invalid_argument("verification grid must have >= 64 points");
  }
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("verification tolerance must be positive");
  }

  const int N = bank.factor;
  VerificationReport report;
  report.factor = N;
  report.grid_size = grid_size;
  report.tolerance = tolerance;
  report.per_row_norm_defect.assign(static_cast<std::size_t>(N), 0.0);
  report.adjacent_row_orthogonality_defect.assign(
      static_cast<std::size_t>(N - 1), 0.0);

  for (int i = 0; i < grid_size; ++i) {
    const double w = kTwoPi * (i + 0.5) / grid_size - kPi;
    const std::vector<std::complex<double>> m = modulation_matrix(bank, w);
    // Gram entries G[a][b] = sum_s M[a][s] conj(M[b][s]) are exactly the
    // row inner products the report diagnoses.
    for (int a = 0; a < N; ++a) {
      const std::complex<double>* row_a = m.data() + static_cast<std::size_t>(a) * N;
      for (int b = a; b < N; ++b) {
        const std::complex<double>* row_b =
            m.data() + static_cast<std::size_t>(b) * N;
        std::complex<double> gram =
            kernels::cdotc(row_b, row_a, static_cast<std::size_t>(N));
        if (a == b) gram -= 1.0;
        const double defect = std::abs(gram);
        report.max_unitarity_defect =
            std::max(report.max_unitarity_defect, defect);
        if (a == b) {
          report.per_row_norm_defect[static_cast<std::size_t>(a)] = std::max(
              report.per_row_norm_defect[static_cast<std::size_t>(a)], defect);
        } else if (b == a + 1) {
          report.adjacent_row_orthogonality_defect[static_cast<std::size_t>(
              a)] =
              std::max(report.adjacent_row_orthogonality_defect
                           [static_cast<std::size_t>(a)],
                       defect);
        }
      }
    }
  }
  report.pass = report.max_unitarity_defect <= tolerance;
  return report;
}

}  // namespace meyerbank
