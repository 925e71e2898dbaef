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

#ifndef MEYERBANK_DFT_HPP
#define MEYERBANK_DFT_HPP

#include <complex>
#include <vector>

// Thin FFTW3 wrappers with the usual engineering conventions.
namespace meyerbank {

// X[j] = sum_n x[n] e^{-2 pi i j n / L}
std::vector<std::complex<double>> dft_forward(
    const std::vector<std::complex<double>>& x);

// x[n] = (1/L) sum_j X[j] e^{+2 pi i j n / L}
std::vector<std::complex<double>> dft_inverse(
    const std::vector<std::complex<double>>& X);

}  // namespace meyerbank

#endif  // MEYERBANK_DFT_HPP
