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

#ifndef MEYERBANK_PLOT_HPP
#define MEYERBANK_PLOT_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

// SVG polyline plots of frequency functions, with a CSV sidecar holding
// the exact sampled values (bit-for-bit the numbers that were plotted).
namespace meyerbank {

struct PlotCurve {
  std::string label;
  std::string color;
  std::function<std::complex<double>(double)> fn;
};

enum class PlotMode { value, modulus };

struct PlotSpec {
  std::string title;
  std::vector<PlotCurve> curves;
  double omega_min = 0.0;
  double omega_max = 0.0;
  int samples = 0;  // >= 2
  PlotMode mode = PlotMode::value;
};

struct PlotData {
  std::vector<double> omega;
  std::vector<std::vector<double>> values;  // [curve][sample]
};

// Uniform sampling over [omega_min, omega_max], endpoints included.
// Throws std::invalid_argument on an empty range, samples < 2, or no
// curves.
PlotData sample_plot(const PlotSpec& spec);

// Polyline chart with x ticks at multiples of pi/6.
std::string render_svg(const PlotSpec& spec, const PlotData& data);

// "omega,<label>,..." header plus one row per sample, 17 significant
// digits.
std::string plot_csv(const PlotSpec& spec, const PlotData& data);

// Writes the SVG at svg_path and the CSV sidecar next to it (extension
// replaced by .csv). Returns the sampled data.
PlotData write_plot(const PlotSpec& spec, const std::string& svg_path);

// Six-band composite symbols built from a three-band outer and the
// two-band inner design: curve l is G^l(2w) * H^0(w) (scaling branch,
// plotted by value; all three are real).
PlotSpec fig1_preset();

// Wavelet-branch counterparts G^l(2w) * H^1(w); complex because of the
// two-band wavelet phase, plotted as moduli.
PlotSpec fig2_preset();

}  // namespace meyerbank

#endif  // MEYERBANK_PLOT_HPP
