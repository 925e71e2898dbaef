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

#include "meyerbank/kernels.hpp"

#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace meyerbank::kernels {
namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect_backend() {
  if (detail::avx2_table() != nullptr && cpu_has_avx2_fma()) {
    return Backend::avx2;
  }
  return Backend::scalar;
}

const detail::KernelTable* table_for(Backend b) {
  if (b == Backend::avx2) return detail::avx2_table();
  return &detail::scalar_table();
}

struct Dispatch {
  Backend backend;
  const detail::KernelTable* table;
  Dispatch() : backend(detect_backend()), table(table_for(backend)) {}
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

Backend active_backend() { return dispatch().backend; }

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return detail::avx2_table() != nullptr && cpu_has_avx2_fma();
  }
  return false;
}

void force_backend(Backend b) {
  if (!backend_supported(b)) {
    throw std::invalid_argument(std::string("kernel backend not supported: ") +
                                backend_name(b));
  }
  dispatch().backend = b;
  dispatch().table = table_for(b);
}

void reset_backend() {
  dispatch().backend = detect_backend();
  dispatch().table = table_for(dispatch().backend);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

std::complex<double> cdotu(const std::complex<double>* a,
                           const std::complex<double>* b, std::size_t n) {
  return dispatch().table->cdotu(a, b, n);
}

std::complex<double> cdotc(const std::complex<double>* a,
                           const std::complex<double>* b, std::size_t n) {
  return dispatch().table->cdotc(a, b, n);
}

void caxpy(std::complex<double> alpha, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n) {
  dispatch().table->caxpy(alpha, x, y, n);
}

double sum_sq_mag(const std::complex<double>* a, std::size_t n) {
  return dispatch().table->sum_sq_mag(a, n);
}

}  // namespace meyerbank::kernels
