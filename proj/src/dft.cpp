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

#include "meyerbank/dft.hpp"

#include <fftw3.h>

#include <stdexcept>

namespace meyerbank {
namespace {

// std::complex<double> is layout-compatible with fftw_complex.
std::vector<std::complex<double>> run_plan(
    const std::vector<std::complex<double>>& in, int sign) {
  if (in.empty()) {
    throw std::invalid_argument("DFT input must be non-empty");
  }
  std::vector<std::complex<double>> out(in.size());
  // FFTW_ESTIMATE does not overwrite the input buffer during planning,
  // so planning on the const input (via cast) is safe.
  fftw_plan plan = fftw_plan_dft_1d(
      static_cast<int>(in.size()),
      reinterpret_cast<fftw_complex*>(
          const_cast<std::complex<double>*>(in.data())),
      reinterpret_cast<fftw_complex*>(out.data()), sign, FFTW_ESTIMATE);
  if (plan == nullptr) {
    throw std::runtime_error("FFTW plan creation failed");
  }
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

}  // namespace

std::vector<std::complex<double>> dft_forward(
    const std::vector<std::complex<double>>& x) {
  return run_plan(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> dft_inverse(
    const std::vector<std::complex<double>>& X) {
  std::vector<std::complex<double>> out = run_plan(X, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(X.size());
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace meyerbank
