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

#ifndef MEYERBANK_SRC_KERNELS_IMPL_HPP
#define MEYERBANK_SRC_KERNELS_IMPL_HPP

#include <complex>
#include <cstddef>

namespace meyerbank::kernels::detail {

struct KernelTable {
  std::complex<double> (*cdotu)(const std::complex<double>*,
                                const std::complex<double>*, std::size_t);
  std::complex<double> (*cdotc)(const std::complex<double>*,
                                const std::complex<double>*, std::size_t);
  void (*caxpy)(std::complex<double>, const std::complex<double>*,
                std::complex<double>*, std::size_t);
  double (*sum_sq_mag)(const std::complex<double>*, std::size_t);
};

const KernelTable& scalar_table();

// nullptr when this build carries no AVX2 translation unit.
const KernelTable* avx2_table();

}  // namespace meyerbank::kernels::detail

#endif  // MEYERBANK_SRC_KERNELS_IMPL_HPP
