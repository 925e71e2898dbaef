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

#include "meyerbank/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "meyerbank/dft.hpp"
#include "meyerbank/kernels.hpp"
#include "meyerbank/synthesis.hpp"

namespace meyerbank {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// A filter reduced to at most one signal period. Windows of the circular
// correlation then start at (start_shift + N m) mod L and run over
// taps.size() contiguous samples of the periodically extended signal.
struct EffectiveFilter {
  std::vector<std::complex<double>> taps;
  long start_shift = 0;
};

EffectiveFilter reduce_filter(const Filter& f, std::size_t L) {
  EffectiveFilter ef;
  if (f.coeffs.size() <= L) {
    ef.taps = f.coeffs;
    ef.start_shift = f.offset;
    return ef;
  }
  // Fold modulo L: on an L-periodic signal only the residue class of the
  // tap index matters, so folding is exact, not an approximation.
  ef.taps.assign(L, {0.0, 0.0});
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
    const long n = f.offset + static_cast<long>(j);
    const long r = ((n % static_cast<long>(L)) + static_cast<long>(L)) %
                   static_cast<long>(L);
    ef.taps[static_cast<std::size_t>(r)] += f.coeffs[j];
  }
  ef.start_shift = 0;
  return ef;
}

std::size_t window_start(const EffectiveFilter& ef, long m, int N,
                         std::size_t L) {
  const long raw = ef.start_shift + static_cast<long>(N) * m;
  const long r =
      ((raw % static_cast<long>(L)) + static_cast<long>(L)) %
      static_cast<long>(L);
  return static_cast<std::size_t>(r);
}

void check_divisible(std::size_t L, int N) {
  if (L == 0) {
    throw std::invalid_argument("signal must have at least one sample");
  }
  if (L % static_cast<std::size_t>(N) != 0) {
    const std::size_t padded = (L / N + 1) * static_cast<std::size_t>(N);
    throw std::invalid_argument(
        "signal length " + std::to_string(L) + " is not divisible by factor " +
        std::to_string(N) + "; pad the signal to " + std::to_string(padded) +
        " samples");
  }
}

void check_coefficients(const CoefficientSet& coeffs, const FilterBank& bank) {
  validate_bank(bank);
  if (coeffs.factor != bank.factor) {
    throw std::invalid_argument("coefficient factor " +
                                std::to_string(coeffs.factor) +
                                " does not match bank factor " +
                                std::to_string(bank.factor));
  }
  if (coeffs.bands.size() != static_cast<std::size_t>(bank.factor)) {
    throw std::invalid_argument("coefficient set must hold one band per filter");
  }
  const std::size_t len = coeffs.bands[0].size();
  if (len == 0) {
    throw std::invalid_argument("coefficient bands must be non-empty");
  }
  for (const auto& band : coeffs.bands) {
    if (band.size() != len) {
      throw std::invalid_argument("coefficient bands must have equal length");
    }
  }
}

}  // namespace

CoefficientSet decompose(const Signal& x, const FilterBank& bank) {
  validate_bank(bank);
  const std::size_t L = x.size();
  const int N = bank.factor;
  check_divisible(L, N);
  const std::size_t per_band = L / static_cast<std::size_t>(N);

  CoefficientSet out;
  out.factor = N;
  out.bands.resize(static_cast<std::size_t>(N));

  // One period plus the longest window of periodic extension serves every
  // band's circular reads.
  std::size_t max_taps = 0;
  std::vector<EffectiveFilter> reduced;
  reduced.reserve(bank.filters.size());
  for (const Filter& f : bank.filters) {
    reduced.push_back(reduce_filter(f, L));
    max_taps = std::max(max_taps, reduced.back().taps.size());
  }
  std::vector<std::complex<double>> extended(L + max_taps - 1);
  for (std::size_t i = 0; i < extended.size(); ++i) {
    extended[i] = x[i % L];
  }

  for (int k = 0; k < N; ++k) {
    const EffectiveFilter& ef = reduced[static_cast<std::size_t>(k)];
    auto& band = out.bands[static_cast<std::size_t>(k)];
    band.resize(per_band);
    for (std::size_t m = 0; m < per_band; ++m) {
      const std::size_t start = window_start(ef, static_cast<long>(m), N, L);
      band[m] = kernels::cdotc(ef.taps.data(), extended.data() + start,
                               ef.taps.size());
    }
  }
  return out;
}

Signal reconstruct(const CoefficientSet& coeffs, const FilterBank& bank) {
  check_coefficients(coeffs, bank);
  const int N = bank.factor;
  const std::size_t per_band = coeffs.bands[0].size();
  const std::size_t L = per_band * static_cast<std::size_t>(N);

  std::size_t max_taps = 0;
  std::vector<EffectiveFilter> reduced;
  reduced.reserve(bank.filters.size());
  for (const Filter& f : bank.filters) {
    reduced.push_back(reduce_filter(f, L));
    max_taps = std::max(max_taps, reduced.back().taps.size());
  }

  // Adjoint of decompose: scatter each coefficient's window, then wrap
  // the overhang back onto the period.
  std::vector<std::complex<double>> extended(L + max_taps - 1, {0.0, 0.0});
  for (int k = 0; k < N; ++k) {
    const EffectiveFilter& ef = reduced[static_cast<std::size_t>(k)];
    const auto& band = coeffs.bands[static_cast<std::size_t>(k)];
    for (std::size_t m = 0; m < per_band; ++m) {
      const std::size_t start = window_start(ef, static_cast<long>(m), N, L);
      kernels::caxpy(band[m], ef.taps.data(), extended.data() + start,
                     ef.taps.size());
    }
  }

  Signal y(extended.begin(), extended.begin() + static_cast<long>(L));
  for (std::size_t i = L; i < extended.size(); ++i) {
    y[i % L] += extended[i];
  }
  return y;
}

CoefficientSet decompose_modulation(const Signal& x, const FilterBank& bank) {
  validate_bank(bank);
  const std::size_t L = x.size();
  const int N = bank.factor;
  check_divisible(L, N);
  const std::size_t per_band = L / static_cast<std::size_t>(N);

  const std::vector<std::complex<double>> X = dft_forward(x);
  const double root_n = std::sqrt(static_cast<double>(N));

  CoefficientSet out;
  out.factor = N;
  out.bands.resize(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) {
    const Filter& f = bank.filters[static_cast<std::size_t>(k)];
    // Unnormalized transfer sum_n h_n e^{-i n w} at the L-th roots of
    // unity; the decimated spectrum folds the N aliases of each output
    // frequency.
    std::vector<std::complex<double>> folded(per_band, {0.0, 0.0});
    for (std::size_t j = 0; j < L; ++j) {
      const std::complex<double> transfer =
          root_n * eval_dtft(f, kTwoPi * static_cast<double>(j) / L);
      folded[j % per_band] += X[j] * std::conj(transfer);
    }
    for (auto& v : folded) v /= static_cast<double>(N);
    out.bands[static_cast<std::size_t>(k)] = dft_inverse(folded);
  }
  return out;
}

CoefficientSet cascade_decompose(const Signal& x,
                                 const FilterBank& first_stage,
                                 const FilterBank& second_stage) {
  validate_bank(first_stage);
  validate_bank(second_stage);
  const int N = first_stage.factor;
  const int M = second_stage.factor;
  check_divisible(x.size(), N * M);

  const CoefficientSet stage1 = decompose(x, first_stage);
  CoefficientSet out;
  out.factor = N * M;
  out.bands.resize(static_cast<std::size_t>(N) * M);
  for (int k = 0; k < N; ++k) {
    const CoefficientSet stage2 =
        decompose(stage1.bands[static_cast<std::size_t>(k)], second_stage);
    for (int l = 0; l < M; ++l) {
      out.bands[static_cast<std::size_t>(k) * M + l] =
          stage2.bands[static_cast<std::size_t>(l)];
    }
  }
  return out;
}

MultilevelDecomposition multilevel_decompose(const Signal& x,
                                             const FilterBank& bank,
                                             int levels) {
  validate_bank(bank);
  if (levels < 1) {
    throw std::invalid_argument("level count must be >= 1");
  }
  const std::size_t L = x.size();
  const int N = bank.factor;

  int feasible = 0;
  for (std::size_t v = L; v > 0 && v % static_cast<std::size_t>(N) == 0;
       v /= static_cast<std::size_t>(N)) {
    ++feasible;
  }
  if (levels > feasible) {
    throw std::invalid_argument(
        "signal length " + std::to_string(L) + " supports at most " +
        std::to_string(feasible) + " level(s) at factor " + std::to_string(N));
  }

  MultilevelDecomposition pyramid;
  pyramid.factor = N;
  pyramid.levels = levels;
  pyramid.signal_length = L;
  Signal approx = x;
  for (int j = 0; j < levels; ++j) {
    CoefficientSet c = decompose(approx, bank);
    pyramid.details.emplace_back(c.bands.begin() + 1, c.bands.end());
    approx = std::move(c.bands[0]);
  }
  pyramid.approximation = std::move(approx);
  return pyramid;
}

Signal multilevel_reconstruct(const MultilevelDecomposition& pyramid,
                              const FilterBank& bank) {
  validate_bank(bank);
  if (pyramid.factor != bank.factor) {
    throw std::invalid_argument("pyramid factor does not match bank factor");
  }
  if (pyramid.levels < 1 ||
      pyramid.details.size() != static_cast<std::size_t>(pyramid.levels)) {
    throw std::invalid_argument("pyramid levels are inconsistent");
  }

  Signal approx = pyramid.approximation;
  for (int j = pyramid.levels - 1; j >= 0; --j) {
    const auto& level = pyramid.details[static_cast<std::size_t>(j)];
    if (level.size() != static_cast<std::size_t>(bank.factor - 1)) {
      throw std::invalid_argument("pyramid level has wrong band count");
    }
    CoefficientSet c;
    c.factor = bank.factor;
    c.bands.reserve(static_cast<std::size_t>(bank.factor));
    c.bands.push_back(std::move(approx));
    for (const auto& band : level) c.bands.push_back(band);
    approx = reconstruct(c, bank);
  }
  return approx;
}

std::vector<std::vector<double>> real_view(const CoefficientSet& coeffs) {
  std::vector<std::vector<double>> view;
  view.reserve(coeffs.bands.size());
  for (std::size_t k = 0; k < coeffs.bands.size(); ++k) {
    std::vector<double> band(coeffs.bands[k].size());
    for (std::size_t m = 0; m < band.size(); ++m) {
      band[m] = (k % 2 == 0) ? coeffs.bands[k][m].real()
                             : std::abs(coeffs.bands[k][m]);
    }
    view.push_back(std::move(band));
  }
  return view;
}

}  // namespace meyerbank
