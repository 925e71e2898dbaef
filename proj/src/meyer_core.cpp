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

#include "meyerbank/meyer_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace meyerbank {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Band-edge abscissas on the u = N*|w| axis. All transitions of every
// band of every factor sit at (j*pi - pi/3, j*pi + pi/3) on this axis,
// which lets phi_hat and H^0 share one code path (keeps the refinement
// identity phi_hat(w) = H^0(w/N)*phi_hat(w/N) tight to ~1e-15).
constexpr double kEdgeLow = 2.0 * kPi / 3.0;   // end of the band-0 plateau
constexpr double kEdgeHigh = 4.0 * kPi / 3.0;  // end of the band-0 rolloff

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

double default_ramp(double x) {
  // 35x^4 - 84x^5 + 70x^6 - 20x^7, evaluated in its odd form around
  // x = 1/2: 1/2 + t*(35/16 - (35/4)t^2 + 21t^4 - 20t^6), t = x - 1/2.
  // The coefficients are dyadic and odd powers flip sign exactly under
  // t -> -t, so ramp(x) + ramp(1-x) = 1 holds to ~1 ulp; plain Horner
  // in x drifts to ~1e-14 on that identity.
  const double t = x - 0.5;
  const double s = t * t;
  return 0.5 + t * (2.1875 + s * (-8.75 + s * (21.0 + s * -20.0)));
}

// Ramp argument for the transition centered at u = j*pi (j >= 1): runs
// 0 -> 1 across [j*pi - pi/3, j*pi + pi/3). Equals 3u/(2pi) - (3j-1)/2.
double edge_argument(double u, int j) {
  return u * (3.0 / kTwoPi) - 0.5 * (3.0 * j - 1.0);
}

// |phi_hat| profile on the scaled axis: plateau, cosine rolloff, zero.
// The rolloff interval is half-open [kEdgeLow, kEdgeHigh) to match the
// band_profile convention, so the support edge itself is exactly zero.
double low_band_profile(double u, const AuxiliaryFunction& aux) {
  if (u <= kEdgeLow) return 1.0;
  if (u < kEdgeHigh) return std::cos(kHalfPi * aux(edge_argument(u, 1)));
  return 0.0;
}

// H^k restricted to u = N*|w| in [0, N*pi], before parity extension.
// Interval boundaries follow the half-open [lo, hi) convention; values
// are continuous across every boundary except u = N*pi for odd k.
double band_profile(int factor, int band, double u,
                    const AuxiliaryFunction& aux) {
  if (band == 0) return low_band_profile(u, aux);
  const double rise_lo = band * kPi - kPi / 3.0;
  const double rise_hi = band * kPi + kPi / 3.0;
  if (u < rise_lo) return 0.0;
  if (u < rise_hi) return std::sin(kHalfPi * aux(edge_argument(u, band)));
  if (band == factor - 1) return 1.0;  // flat through u = N*pi
  const double fall_lo = (band + 1) * kPi - kPi / 3.0;
  const double fall_hi = (band + 1) * kPi + kPi / 3.0;
  if (u < fall_lo) return 1.0;
  if (u < fall_hi) return std::cos(kHalfPi * aux(edge_argument(u, band + 1)));
  return 0.0;
}

void validate_descriptor(const FrequencyDescriptor& desc) {
  if (desc.factor < 2) {
    throw std::invalid_argument("frequency descriptor requires factor >= 2");
  }
  if (desc.band < 0 || desc.band >= desc.factor) {
    throw std::invalid_argument("band index outside [0, factor-1]");
  }
}

}  // namespace

AuxiliaryFunction::AuxiliaryFunction(Kind kind,
                                     std::function<double(double)> ramp)
    : kind_(kind), ramp_(std::move(ramp)) {}

AuxiliaryFunction AuxiliaryFunction::polynomial_degree7() {
  return AuxiliaryFunction(Kind::polynomial_degree7, default_ramp);
}

AuxiliaryFunction AuxiliaryFunction::user_supplied(
    std::function<double(double)> ramp) {
  if (!ramp) {
    throw std::invalid_argument("user-supplied ramp must be callable");
  }
  // Spot-check the interpolation contract on a coarse grid.
  double prev = 0.0;
  for (int i = 1; i < 32; ++i) {
    const double v = ramp(i / 32.0);
    if (!std::isfinite(v) || v < prev - 1e-12) {
      throw std::invalid_argument(
          "user-supplied ramp must be finite and nondecreasing on (0,1)");
    }
    prev = v;
  }
  if (std::abs(ramp(1.0 - 1e-12) - 1.0) > 1e-6 ||
      std::abs(ramp(1e-12)) > 1e-6) {
    throw std::invalid_argument("user-supplied ramp must run from 0 to 1");
  }
  return AuxiliaryFunction(Kind::user_supplied, std::move(ramp));
}

double AuxiliaryFunction::operator()(double x) const {
  require_finite(x, "auxiliary function argument");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return ramp_(x);
}

double eval_nu(const AuxiliaryFunction& aux, double x) { return aux(x); }

double eval_phi_hat(const AuxiliaryFunction& aux, double w) {
  require_finite(w, "frequency");
  return low_band_profile(std::fabs(w), aux);
}

double principal_angle(double w) {
  double r = std::remainder(w, kTwoPi);
  if (r == kPi) r = -kPi;
  return r;
}

double eval_H(const FrequencyDescriptor& desc, double w) {
  validate_descriptor(desc);
  require_finite(w, "frequency");
  const double r = principal_angle(w);
  const double value =
      band_profile(desc.factor, desc.band, desc.factor * std::fabs(r),
                   desc.aux);
  if (!desc.even_parity() && r < 0.0) return -value;
  return value;
}

std::complex<double> eval_H_classical2(ClassicalBand which, double w,
                                       const AuxiliaryFunction& aux) {
  require_finite(w, "frequency");
  const FrequencyDescriptor scaling{2, 0, aux};
  if (which == ClassicalBand::scaling) {
    return {eval_H(scaling, w), 0.0};
  }
  const double mag = eval_H(scaling, w + kPi);
  return std::complex<double>(std::cos(w), std::sin(w)) * mag;
}

}  // namespace meyerbank
