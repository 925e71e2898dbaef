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

#ifndef MEYERBANK_MEYER_CORE_HPP
#define MEYERBANK_MEYER_CORE_HPP

#include <complex>
#include <functional>

// Analytic evaluation of the Meyer-type band functions.
//
// Conventions used throughout this module:
//  * nu is the monotone smoothing profile with nu(x)=0 for x<=0 and
//    nu(x)=1 for x>=1; the default is the degree-7 polynomial
//    x^4(35 - 84x + 70x^2 - 20x^3), which satisfies nu(x)+nu(1-x)=1.
//  * phi_hat is the scaling-function spectrum: 1 on [-2pi/3, 2pi/3],
//    a cosine rolloff on 2pi/3 <= |w| <= 4pi/3, 0 beyond. Not periodized.
//  * eval_H gives the 2pi-periodic band functions H^k for a factor-N
//    bank. On [0, pi] band k rises over [k pi/N - pi/3N, k pi/N + pi/3N),
//    is flat at 1, and falls over [(k+1) pi/N - pi/3N, (k+1) pi/N + pi/3N);
//    band 0 has no rise and band N-1 stays flat up to pi. The extension
//    to [-pi, pi] is even for even k and odd for odd k.
//  * For even N the last band is odd with value 1 at pi^-, so the
//    periodized function jumps at +-pi; the value AT +-pi is -1 (the
//    right-limit convention of the odd extension). This discontinuity is
//    what makes direct even-N filters decay slowly.
namespace meyerbank {

// Smoothing profile nu. Arguments are clamped: 0 below 0, 1 above 1.
class AuxiliaryFunction {
 public:
  enum class Kind { polynomial_degree7, user_supplied };

  static AuxiliaryFunction polynomial_degree7();

  // The ramp is consulted only on (0, 1). It must interpolate 0 -> 1 and
  // be nondecreasing; both are spot-checked at construction.
  static AuxiliaryFunction user_supplied(std::function<double(double)> ramp);

  double operator()(double x) const;

  Kind kind() const { return kind_; }

 private:
  AuxiliaryFunction(Kind kind, std::function<double(double)> ramp);

  Kind kind_;
  std::function<double(double)> ramp_;
};

// One band of a factor-N bank, identified analytically.
struct FrequencyDescriptor {
  int factor;  // N >= 2
  int band;    // k in [0, N-1]
  AuxiliaryFunction aux = AuxiliaryFunction::polynomial_degree7();

  bool even_parity() const { return band % 2 == 0; }
};

// nu(x). Throws std::invalid_argument for non-finite x.
double eval_nu(const AuxiliaryFunction& aux, double x);

// phi_hat(w), real and even, supported on |w| <= 4pi/3.
double eval_phi_hat(const AuxiliaryFunction& aux, double w);

// H^k(w) for the given descriptor, real-valued, 2pi-periodic.
double eval_H(const FrequencyDescriptor& desc, double w);

// Two-band design: the real scaling function H^0 and the complex wavelet
// H^1(w) = e^{iw} * conj(H^0(w + pi)). H^0 is real so the conjugate is a
// no-op, but the phase factor makes H^1 genuinely complex.
enum class ClassicalBand { scaling, wavelet };

std::complex<double> eval_H_classical2(
    ClassicalBand which, double w,
    const AuxiliaryFunction& aux = AuxiliaryFunction::polynomial_degree7());

// Reduces w modulo 2pi into [-pi, pi). Exact (returns w unchanged) when w
// is already in range.
double principal_angle(double w);

}  // namespace meyerbank

#endif  // MEYERBANK_MEYER_CORE_HPP
