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

#ifndef MEYERBANK_KERNELS_HPP
#define MEYERBANK_KERNELS_HPP

#include <complex>
#include <cstddef>

// Hot complex inner loops used by the transform and verification paths.
// A scalar reference implementation is always available; an AVX2+FMA
// variant is selected at runtime when the CPU supports it. Both variants
// compute the same sums, differing only in association order, so results
// agree to rounding error (covered by equivalence tests).
namespace meyerbank::kernels {

enum class Backend { scalar, avx2 };

// Backend chosen at startup (scalar unless AVX2 and FMA are available).
Backend active_backend();

bool backend_supported(Backend b);

// Overrides the dispatch choice; throws std::invalid_argument if the
// requested backend is not usable on this machine. Not thread-safe with
// respect to concurrent kernel calls.
void force_backend(Backend b);

// Restores the startup choice after force_backend.
void reset_backend();

const char* backend_name(Backend b);

// sum_i a[i] * b[i]
std::complex<double> cdotu(const std::complex<double>* a,
                           const std::complex<double>* b, std::size_t n);

// sum_i conj(a[i]) * b[i]
std::complex<double> cdotc(const std::complex<double>* a,
                           const std::complex<double>* b, std::size_t n);

// y[i] += alpha * x[i]
void caxpy(std::complex<double> alpha, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n);

// sum_i |a[i]|^2
double sum_sq_mag(const std::complex<double>* a, std::size_t n);

}  // namespace meyerbank::kernels

#endif  // MEYERBANK_KERNELS_HPP
