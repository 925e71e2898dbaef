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

#include "kernels_impl.hpp"

// Reference kernels. Plain accumulation over separate real/imaginary
// parts; kept free of manual unrolling so the intent stays readable.
namespace meyerbank::kernels::detail {
namespace {

std::complex<double> scalar_cdotu(const std::complex<double>* a,
                                  const std::complex<double>* b,
                                  std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

std::complex<double> scalar_cdotc(const std::complex<double>* a,
                                  const std::complex<double>* b,
                                  std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

void scalar_caxpy(std::complex<double> alpha, const std::complex<double>* x,
                  std::complex<double>* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += std::complex<double>(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

double scalar_sum_sq_mag(const std::complex<double>* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return acc;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table = {scalar_cdotu, scalar_cdotc, scalar_caxpy,
                                    scalar_sum_sq_mag};
  return table;
}

}  // namespace meyerbank::kernels::detail
