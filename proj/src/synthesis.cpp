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

#include "meyerbank/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "meyerbank/dft.hpp"
#include "meyerbank/kernels.hpp"

namespace meyerbank {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

double sq_mag(const std::complex<double>& c) {
  return c.real() * c.real() + c.imag() * c.imag();
}

}  // namespace

FrequencyFunction FrequencyFunction::from_descriptor(
    const FrequencyDescriptor& desc) {
  FrequencyFunction fn;
  fn.factor = desc.factor;
  fn.band = desc.band;
  fn.eval = [desc](double w) {
    return std::complex<double>(eval_H(desc, w), 0.0);
  };
  return fn;
}

FrequencyFunction FrequencyFunction::classical2(ClassicalBand which) {
  FrequencyFunction fn;
  fn.factor = 2;
  fn.band = which == ClassicalBand::scaling ? 0 : 1;
  fn.eval = [which](double w) { return eval_H_classical2(which, w); };
  return fn;
}

FrequencyFunction FrequencyFunction::constant(double value, int factor) {
  FrequencyFunction fn;
  fn.factor = factor;
  fn.band = 0;
  fn.eval = [value](double) { return std::complex<double>(value, 0.0); };
  return fn;
}

Filter synthesize_filter(const FrequencyFunction& fn, int samples,
                         double threshold) {
  if (!is_power_of_two(samples) || samples < 256) {
    throw std::invalid_argument(
        "sample count must be a power of two >= 256, got " +
        std::to_string(samples));
  }
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("truncation threshold must lie in (0, 1)");
  }
  if (fn.factor < 1 || !fn.eval) {
    throw std::invalid_argument("frequency function handle is incomplete");
  }

  const int S = samples;
  std::vector<std::complex<double>> spectrum(S);
  for (int j = 0; j < S; ++j) {
    spectrum[j] = fn.eval(kTwoPi * j / S);
  }

  // Inverse transform gives the coefficient at time r for r < S/2 and at
  // time r - S for r >= S/2; reorder to a contiguous window starting at
  // -S/2 and apply the sqrt(N) normalization.
  const std::vector<std::complex<double>> time = dft_inverse(spectrum);
  const double root_n = std::sqrt(static_cast<double>(fn.factor));
  std::vector<std::complex<double>> coeffs(S);
  for (int i = 0; i < S; ++i) {
    coeffs[i] = root_n * time[static_cast<std::size_t>((i + S / 2) % S)];
  }

  // Greedy truncation: drop the smaller end coefficient while the total
  // discarded mass stays within budget. Ends are compared by energy, not
  // index, since composite-style filters are not index-symmetric.
  const double total = kernels::sum_sq_mag(coeffs.data(), coeffs.size());
  const double budget = threshold * threshold * total;
  std::size_t lo = 0, hi = coeffs.size() - 1;
  double dropped = 0.0;
  while (lo < hi) {
    const double e_lo = sq_mag(coeffs[lo]);
    const double e_hi = sq_mag(coeffs[hi]);
    const double e = std::min(e_lo, e_hi);
    if (dropped + e > budget) break;
    dropped += e;
    if (e_lo <= e_hi) {
      ++lo;
    } else {
      --hi;
    }
  }

  Filter f;
  f.coeffs.assign(coeffs.begin() + static_cast<long>(lo),
                  coeffs.begin() + static_cast<long>(hi) + 1);
  f.offset = static_cast<int>(lo) - S / 2;
  f.factor = fn.factor;
  f.band = fn.band;
  f.tail_energy = dropped;
  f.sample_count = S;
  return f;
}

FilterBank synthesize_bank(int factor, int samples, double threshold) {
  if (factor < 2) {
    throw std::invalid_argument("bank factor must be >= 2");
  }
  FilterBank bank;
  bank.factor = factor;
  if (factor == 2) {
    bank.provenance = classical2_provenance();
    bank.filters.push_back(synthesize_filter(
        FrequencyFunction::classical2(ClassicalBand::scaling), samples,
        threshold));
    bank.filters.push_back(synthesize_filter(
        FrequencyFunction::classical2(ClassicalBand::wavelet), samples,
        threshold));
    return bank;
  }
  bank.provenance = direct_provenance(factor);
  for (int k = 0; k < factor; ++k) {
    bank.filters.push_back(synthesize_filter(
        FrequencyFunction::from_descriptor({factor, k}), samples, threshold));
  }
  return bank;
}

FilterBank compose_banks(const FilterBank& outer, const FilterBank& inner) {
  validate_bank(outer);
  validate_bank(inner);
  const int M = outer.factor;
  const int N = inner.factor;
  if (static_cast<long>(M) * N > (1L << 16)) {
    throw std::invalid_argument("composite factor exceeds 2^16");
  }

  for (const FilterBank* b : {&outer, &inner}) {
    for (const Filter& f : b->filters) {
      if (f.coeffs.empty()) {
        throw std::invalid_argument("cannot compose banks with empty filters");
      }
    }
  }

  FilterBank bank;
  bank.factor = M * N;
  bank.provenance = composite_provenance(M, N);
  bank.filters.reserve(static_cast<std::size_t>(M) * N);
  for (int k = 0; k < N; ++k) {
    const Filter& h = inner.filters[static_cast<std::size_t>(k)];
    for (int l = 0; l < M; ++l) {
      const Filter& g = outer.filters[static_cast<std::size_t>(l)];
      Filter out;
      out.coeffs.assign(h.coeffs.size() + static_cast<std::size_t>(N) *
                                              (g.coeffs.size() - 1),
                        {0.0, 0.0});
      // h^{kl}_n = sum_m g^l_m h^k_{n - mN}: each outer tap adds a shifted
      // copy of the inner filter.
      for (std::size_t m = 0; m < g.coeffs.size(); ++m) {
        kernels::caxpy(g.coeffs[m], h.coeffs.data(),
                       out.coeffs.data() + m * static_cast<std::size_t>(N),
                       h.coeffs.size());
      }
      out.offset = h.offset + N * g.offset;
      out.factor = M * N;
      out.band = k * M + l;
      out.tail_energy = g.tail_energy + h.tail_energy;
      out.sample_count = std::max(g.sample_count, h.sample_count);
      bank.filters.push_back(std::move(out));
    }
  }
  return bank;
}

std::complex<double> eval_dtft(const Filter& f, double w) {
  if (!std::isfinite(w)) {
    throw std::invalid_argument("frequency must be finite");
  }
  if (f.coeffs.empty()) return {0.0, 0.0};

  // Phase table e^{-i n w} built by recurrence, re-anchored with an exact
  // sin/cos evaluation every 256 steps to stop drift.
  static constexpr std::size_t kResync = 256;
  const std::size_t n = f.coeffs.size();
  std::vector<std::complex<double>> phases(n);
  const std::complex<double> step(std::cos(w), -std::sin(w));
  for (std::size_t j0 = 0; j0 < n; j0 += kResync) {
    const double anchor = -(static_cast<double>(f.offset) + j0) * w;
    std::complex<double> p(std::cos(anchor), std::sin(anchor));
    const std::size_t j1 = std::min(n, j0 + kResync);
    for (std::size_t j = j0; j < j1; ++j) {
      phases[j] = p;
      p *= step;
    }
  }
  const std::complex<double> acc =
      kernels::cdotu(f.coeffs.data(), phases.data(), n);
  return acc / std::sqrt(static_cast<double>(f.factor));
}

double tail_energy_outside(const Filter& f, int radius) {
  if (radius < 0) {
    throw std::invalid_argument("radius must be >= 0");
  }
  const long size = static_cast<long>(f.coeffs.size());
  // Coefficients with n < -radius occupy j < -radius - offset; those with
  // n > radius occupy j > radius - offset.
  const long left_end = std::clamp(-static_cast<long>(radius) - f.offset, 0L,
                                   size);
  const long right_begin = std::clamp(
      static_cast<long>(radius) - f.offset + 1, 0L, size);
  double tail = 0.0;
  if (left_end > 0) {
    tail += kernels::sum_sq_mag(f.coeffs.data(),
                                static_cast<std::size_t>(left_end));
  }
  if (right_begin < size) {
    tail += kernels::sum_sq_mag(f.coeffs.data() + right_begin,
                                static_cast<std::size_t>(size - right_begin));
  }
  return tail;
}

std::vector<std::pair<int, double>> decay_profile(const Filter& f) {
  const int reach =
      std::max(std::abs(f.min_index()), std::abs(f.max_index()));
  std::vector<std::pair<int, double>> profile;
  profile.emplace_back(0, tail_energy_outside(f, 0));
  for (int r = 1;; r *= 2) {
    profile.emplace_back(r, tail_energy_outside(f, r));
    if (r >= reach || r > (1 << 28)) break;
  }
  return profile;
}

}  // namespace meyerbank
