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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <meyerbank/meyer_core.hpp>
#include <meyerbank/synthesis.hpp>

#include "test_util.hpp"

namespace {

using cd = std::complex<double>;
using meyerbank::AuxiliaryFunction;
using meyerbank::Filter;
using meyerbank::FilterBank;
using meyerbank::FrequencyDescriptor;
using meyerbank::FrequencyFunction;
using meyerbank::compose_banks;
using meyerbank::eval_dtft;
using meyerbank::eval_H;
using meyerbank::synthesize_bank;
using meyerbank::synthesize_filter;
using meyerbank::tail_energy_outside;

constexpr double kPi = 3.14159265358979323846;

// Midpoint-rule Fourier coefficient, on a grid size that is neither a
// power of two nor shared with the synthesis grid. For these smooth
// periodic integrands the quadrature error is pure aliasing, far below
// the comparison tolerance.
cd quadrature_coeff(const FrequencyDescriptor& desc, int n, int points) {
    cd acc{0.0, 0.0};
    for (int j = 0; j < points; ++j) {
        double w = 2.0 * kPi * (static_cast<double>(j) + 0.5) / points;
        double phase = n * w;
        acc += eval_H(desc, w) * cd{std::cos(phase), std::sin(phase)};
    }
    return acc * (std::sqrt(static_cast<double>(desc.factor)) / static_cast<double>(points));
}

FilterBank impulse_bank(int factor) {
    FilterBank bank;
    bank.factor = factor;
    bank.provenance = meyerbank::direct_provenance(factor);
    for (int k = 0; k < factor; ++k) {
        Filter f;
        f.coeffs = {cd{1.0, 0.0}};
        f.offset = 0;
        f.factor = factor;
        f.band = k;
        bank.filters.push_back(f);
    }
    return bank;
}

cd coeff_sum(const Filter& f) {
    cd s{0.0, 0.0};
    for (const auto& c : f.coeffs) s += c;
    return s;
}

}  // namespace

TEST_CASE("synthesized coefficients match a midpoint quadrature oracle") {
    auto aux = AuxiliaryFunction::polynomial_degree7();
    for (int band : {0, 1}) {
        FrequencyDescriptor desc{3, band, aux};
        Filter f = synthesize_filter(FrequencyFunction::from_descriptor(desc));
        for (int n : {0, 1, -1, 2, -2, 5, -5, 17, -17}) {
            cd want = quadrature_coeff(desc, n, 49152);
            CAPTURE(band);
            CAPTURE(n);
            CHECK(std::abs(f.at(n) - want) <= 1e-12);
        }
    }
}

TEST_CASE("coefficient sums reproduce the symbol at frequency zero") {
    FilterBank b3 = synthesize_bank(3);
    double root3 = std::sqrt(3.0);
    CHECK(std::abs(coeff_sum(b3.filters[0]) - cd{root3, 0.0}) <= 1e-8);
    CHECK(std::abs(coeff_sum(b3.filters[1])) <= 1e-8);
    CHECK(std::abs(coeff_sum(b3.filters[2])) <= 1e-8);
}

TEST_CASE("every band comes out unit norm") {
    for (const FilterBank& bank : {synthesize_bank(2), synthesize_bank(3)}) {
        for (const Filter& f : bank.filters) {
            CAPTURE(bank.factor);
            CAPTURE(f.band);
            CHECK(std::abs(f.energy() - 1.0) <= 1e-8);
        }
    }
}

TEST_CASE("a constant symbol collapses to a single coefficient") {
    Filter f = synthesize_filter(FrequencyFunction::constant(2.5, 4));
    REQUIRE(f.coeffs.size() == 1);
    CHECK(f.offset == 0);
    CHECK(std::abs(f.coeffs[0] - cd{5.0, 0.0}) <= 1e-10);
    CHECK(f.tail_energy <= 1e-18);
}

TEST_CASE("coefficients carry the parity of their symbol") {
    // Trim at 1e-14 so the stored window ends at the FFT noise floor.
    // The default 1e-10 trim leaves a slightly lopsided window whose
    // edge coefficients (~1e-11, at the drop-budget scale) would
    // otherwise dominate an at(n) vs at(-n) comparison.
    auto aux = AuxiliaryFunction::polynomial_degree7();
    auto tight = [&aux](int band) {
        FrequencyDescriptor desc{3, band, aux};
        return synthesize_filter(FrequencyFunction::from_descriptor(desc),
                                 meyerbank::kDefaultSampleCount, 1e-14);
    };

    // Even bands: real coefficients, symmetric about n = 0.
    for (int band : {0, 2}) {
        Filter f = tight(band);
        for (int n = 0; n <= f.max_index(); ++n) {
            CHECK(std::abs(f.at(n).imag()) <= 1e-12);
            CHECK(std::abs(f.at(n) - f.at(-n)) <= 1e-12);
        }
    }

    // Odd band: purely imaginary, conjugate-symmetric (equivalently
    // antisymmetric) about n = 0.
    Filter f1 = tight(1);
    for (int n = 0; n <= f1.max_index(); ++n) {
        CHECK(std::abs(f1.at(n).real()) <= 1e-12);
        CHECK(std::abs(f1.at(-n) - std::conj(f1.at(n))) <= 1e-12);
    }

    // Under the default trim the same symmetry holds only down to the
    // truncation scale set by the coefficient threshold.
    FilterBank b3 = synthesize_bank(3);
    for (const Filter& f : b3.filters) {
        double sign = (f.band % 2 == 0) ? 1.0 : -1.0;
        for (int n = 0; n <= f.max_index(); ++n) {
            CHECK(std::abs(f.at(n) - sign * f.at(-n)) <= 1e-9);
        }
    }
}

TEST_CASE("two-band bank obeys the conjugate mirror coefficient relation") {
    FilterBank b2 = synthesize_bank(2);
    CHECK(b2.provenance == "classical2");
    const Filter& h0 = b2.filters[0];
    const Filter& h1 = b2.filters[1];
    for (int n = h1.min_index(); n <= h1.max_index(); ++n) {
        double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
        CHECK(std::abs(h1.at(n) - sign * std::conj(h0.at(-n - 1))) <= 1e-10);
    }
}

TEST_CASE("transfer evaluation reproduces the analytic symbols") {
    auto aux = AuxiliaryFunction::polynomial_degree7();
    FilterBank b2 = synthesize_bank(2);
    FilterBank b3 = synthesize_bank(3);

    CHECK(std::abs(eval_dtft(b3.filters[0], 0.0) - cd{1.0, 0.0}) <= 1e-8);

    double w = kPi / 3.0 + kPi / 18.0;
    CHECK(std::abs(eval_dtft(b3.filters[1], w) -
                   cd{eval_H(FrequencyDescriptor{3, 1, aux}, w), 0.0}) <= 1e-8);

    CHECK(std::abs(eval_dtft(b2.filters[1], 2.0) -
                   meyerbank::eval_H_classical2(meyerbank::ClassicalBand::wavelet, 2.0)) <= 1e-8);
}

TEST_CASE("transfer error at synthesis grid points stays within the tail bound") {
    // On the synthesis DFT grid the only error sources are the truncation
    // threshold and the discarded window mass; the bound below follows
    // from Cauchy-Schwarz on the dropped coefficients.
    auto aux = AuxiliaryFunction::polynomial_degree7();
    const int s = meyerbank::kDefaultSampleCount;
    auto rng = testutil::make_rng(77);
    std::uniform_int_distribution<int> pick(0, s - 1);

    for (int band = 0; band < 3; ++band) {
        FrequencyDescriptor desc{3, band, aux};
        Filter f = synthesize_filter(FrequencyFunction::from_descriptor(desc));
        double dropped = static_cast<double>(s) - static_cast<double>(f.coeffs.size());
        double bound = 10.0 * (meyerbank::kDefaultThreshold +
                               std::sqrt(std::max(0.0, dropped) * f.tail_energy / 3.0) + 1e-12);
        for (int trial = 0; trial < 128; ++trial) {
            int j = pick(rng);
            double w = 2.0 * kPi * static_cast<double>(j) / s;
            CAPTURE(band);
            CAPTURE(j);
            CHECK(std::abs(eval_dtft(f, w) - cd{eval_H(desc, w), 0.0}) <= bound);
        }
    }
}

TEST_CASE("coefficients are stable under doubling the synthesis grid") {
    auto aux = AuxiliaryFunction::polynomial_degree7();
    FrequencyDescriptor desc{3, 1, aux};
    Filter coarse = synthesize_filter(FrequencyFunction::from_descriptor(desc), 8192);
    Filter fine = synthesize_filter(FrequencyFunction::from_descriptor(desc), 16384);
    for (int n : {0, 1, -1, 7, -7, 33, -33, 101, -101}) {
        CHECK(std::abs(coarse.at(n) - fine.at(n)) <= 1e-10);
    }
}

TEST_CASE("composing with an impulse outer bank reproduces the inner filters") {
    FilterBank b3 = synthesize_bank(3);
    FilterBank comp = compose_banks(impulse_bank(2), b3);
    REQUIRE(comp.factor == 6);
    CHECK(comp.provenance == "composite(2,3)");
    for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 2; ++l) {
            const Filter& got = comp.filters[static_cast<std::size_t>(k * 2 + l)];
            const Filter& want = b3.filters[static_cast<std::size_t>(k)];
            CAPTURE(k);
            CAPTURE(l);
            CHECK(got.offset == want.offset);
            REQUIRE(got.coeffs.size() == want.coeffs.size());
            // Convolution against a single unit tap copies coefficients
            // without any arithmetic, so equality is exact.
            CHECK(testutil::max_abs_diff(got.coeffs, want.coeffs) == 0.0);
        }
    }
}

TEST_CASE("composite transfer factors into outer and inner symbols") {
    FilterBank b2 = synthesize_bank(2);
    FilterBank b3 = synthesize_bank(3);
    FilterBank comp = compose_banks(b3, b2);
    REQUIRE(comp.factor == 6);
    CHECK(comp.provenance == "composite(3,2)");

    double worst = 0.0;
    for (int i = 0; i < 128; ++i) {
        double w = 2.0 * kPi * (static_cast<double>(i) + 0.5) / 128.0 - kPi;
        for (int k = 0; k < 2; ++k) {
            for (int l = 0; l < 3; ++l) {
                cd lhs = eval_dtft(comp.filters[static_cast<std::size_t>(k * 3 + l)], w);
                cd rhs = eval_dtft(b3.filters[static_cast<std::size_t>(l)], 2.0 * w) *
                         eval_dtft(b2.filters[static_cast<std::size_t>(k)], w);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("composite band zero agrees with the directly synthesized factor") {
    auto aux = AuxiliaryFunction::polynomial_degree7();
    FilterBank comp = compose_banks(synthesize_bank(3), synthesize_bank(2));
    Filter direct =
        synthesize_filter(FrequencyFunction::from_descriptor(FrequencyDescriptor{6, 0, aux}));
    const Filter& composite0 = comp.filters[0];

    int lo = std::min(direct.min_index(), composite0.min_index());
    int hi = std::max(direct.max_index(), composite0.max_index());
    double worst = 0.0;
    for (int n = lo; n <= hi; ++n) {
        worst = std::max(worst, std::abs(direct.at(n) - composite0.at(n)));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("direct even designs decay slowly, composites do not") {
    FilterBank b4 = synthesize_bank(4);
    double t1 = tail_energy_outside(b4.filters[1], 200);
    double t3 = tail_energy_outside(b4.filters[3], 200);
    CHECK(t3 >= 100.0 * t1);
    CHECK(t3 >= 1e-4);                         // the jump keeps real mass far out
    CHECK(b4.filters[3].coeffs.size() > 4000); // truncation cannot shorten it

    FilterBank comp4 = compose_banks(synthesize_bank(2), synthesize_bank(2));
    for (const Filter& f : comp4.filters) {
        CHECK(tail_energy_outside(f, 100) <= t3 / 100.0);
    }
}

TEST_CASE("decay profiles walk out to the filter reach") {
    FilterBank b3 = synthesize_bank(3);
    auto profile = meyerbank::decay_profile(b3.filters[1]);
    REQUIRE(profile.size() >= 2);
    CHECK(profile.front().first == 0);
    for (std::size_t i = 1; i < profile.size(); ++i) {
        CHECK(profile[i].first > profile[i - 1].first);
        CHECK(profile[i].second <= profile[i - 1].second);
    }
    // The last radius covers the stored window, so nothing remains outside.
    CHECK(profile.back().second == 0.0);
    CHECK(tail_energy_outside(b3.filters[1], 200) < 1e-8);

    Filter impulse;
    impulse.coeffs = {cd{1.0, 0.0}};
    auto flat = meyerbank::decay_profile(impulse);
    for (const auto& [radius, mass] : flat) {
        CHECK(mass == 0.0);
        CHECK(radius >= 0);
    }
}

TEST_CASE("synthesis rejects bad sampling parameters") {
    auto fn = FrequencyFunction::constant(1.0, 2);
    CHECK_THROWS_AS(synthesize_filter(fn, 100), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_filter(fn, 1000), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_filter(fn, 8192, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_filter(fn, 8192, 1.0), std::invalid_argument);
    FrequencyFunction hollow;
    hollow.factor = 3;
    CHECK_THROWS_AS(synthesize_filter(hollow), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_bank(1), std::invalid_argument);
    CHECK_THROWS_AS(tail_energy_outside(Filter{}, -1), std::invalid_argument);
}

TEST_CASE("composition guards its preconditions") {
    FilterBank big_a = impulse_bank(300);
    FilterBank big_b = impulse_bank(300);
    CHECK_THROWS_AS(compose_banks(big_a, big_b), std::invalid_argument);

    FilterBank hollow = impulse_bank(2);
    hollow.filters[1].coeffs.clear();
    CHECK_THROWS_AS(compose_banks(hollow, impulse_bank(3)), std::invalid_argument);
}
