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

// This translation unit is compiled with -mavx2 -mfma when the toolchain
// supports it. Two interleaved complex doubles are processed per vector:
// a ymm register holds [re0, im0, re1, im1].
#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace meyerbank::kernels::detail {
namespace {

// (re, im) totals of a [re, im, re, im] accumulator.
inline std::complex<double> reduce_pairs(__m256d acc) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return {lanes[0] + lanes[2], lanes[1] + lanes[3]};
}

std::complex<double> avx2_cdotu(const std::complex<double>* a,
                                const std::complex<double>* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
    const __m256d vb = _mm256_loadu_pd(reinterpret_cast<const double*>(b + i));
    const __m256d a_re = _mm256_movedup_pd(va);
    const __m256d a_im = _mm256_permute_pd(va, 0xF);
    const __m256d b_swap = _mm256_permute_pd(vb, 0x5);
    // even lanes: re_a*re_b - im_a*im_b, odd lanes: re_a*im_b + im_a*re_b
    acc = _mm256_add_pd(
        acc, _mm256_fmaddsub_pd(a_re, vb, _mm256_mul_pd(a_im, b_swap)));
  }
  std::complex<double> total = reduce_pairs(acc);
  for (; i < n; ++i) {
    total += std::complex<double>(
        a[i].real() * b[i].real() - a[i].imag() * b[i].imag(),
        a[i].real() * b[i].imag() + a[i].imag() * b[i].real());
  }
  return total;
}

std::complex<double> avx2_cdotc(const std::complex<double>* a,
                                const std::complex<double>* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
    const __m256d vb = _mm256_loadu_pd(reinterpret_cast<const double*>(b + i));
    const __m256d a_re = _mm256_movedup_pd(va);
    const __m256d a_im = _mm256_permute_pd(va, 0xF);
    const __m256d b_swap = _mm256_permute_pd(vb, 0x5);
    // even lanes: re_a*re_b + im_a*im_b, odd lanes: re_a*im_b - im_a*re_b
    acc = _mm256_add_pd(
        acc, _mm256_fmsubadd_pd(a_re, vb, _mm256_mul_pd(a_im, b_swap)));
  }
  std::complex<double> total = reduce_pairs(acc);
  for (; i < n; ++i) {
    total += std::complex<double>(
        a[i].real() * b[i].real() + a[i].imag() * b[i].imag(),
        a[i].real() * b[i].imag() - a[i].imag() * b[i].real());
  }
  return total;
}

void avx2_caxpy(std::complex<double> alpha, const std::complex<double>* x,
                std::complex<double>* y, std::size_t n) {
  const __m256d al_re = _mm256_set1_pd(alpha.real());
  const __m256d al_im = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
    const __m256d vy = _mm256_loadu_pd(reinterpret_cast<double*>(y + i));
    const __m256d x_swap = _mm256_permute_pd(vx, 0x5);
    const __m256d prod =
        _mm256_fmaddsub_pd(al_re, vx, _mm256_mul_pd(al_im, x_swap));
    _mm256_storeu_pd(reinterpret_cast<double*>(y + i),
                     _mm256_add_pd(vy, prod));
  }
  const double ar = alpha.real(), ai = alpha.imag();
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += std::complex<double>(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

double avx2_sum_sq_mag(const std::complex<double>* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
    acc = _mm256_fmadd_pd(va, va, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    total += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return total;
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table = {avx2_cdotu, avx2_cdotc, avx2_caxpy,
                                    avx2_sum_sq_mag};
  return &table;
}

}  // namespace meyerbank::kernels::detail

#else  // no AVX2/FMA in this build

namespace meyerbank::kernels::detail {

const KernelTable* avx2_table() { return nullptr; }

}  // namespace meyerbank::kernels::detail

#endif
