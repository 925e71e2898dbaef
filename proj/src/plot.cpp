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

#include "meyerbank/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "meyerbank/io.hpp"
#include "meyerbank/meyer_core.hpp"

namespace meyerbank {
namespace {

constexpr double kPi = std::numbers::pi;

// Chart geometry (viewbox units).
constexpr double kWidth = 960.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// Label for the multiple m of pi/6, reduced: "0", "±π", "±π/6", "±2π/3"...
std::string pi_sixth_label(long m) {
  if (m == 0) return "0";
  const long g = std::gcd(std::labs(m), 6L);
  const long num = std::labs(m) / g;
  const long den = 6 / g;
  std::string s = m < 0 ? "-" : "";
  if (num > 1) s += std::to_string(num);
  s += "\xCF\x80";  // pi
  if (den > 1) s += "/" + std::to_string(den);
  return s;
}

// Step of 1/2/5 times a power of ten close to range/5.
double nice_step(double range) {
  const double raw = range / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= mult * mag * 1.0000001) return mult * mag;
  }
  return 10.0 * mag;
}

}  // namespace

PlotData sample_plot(const PlotSpec& spec) {
  if (spec.curves.empty()) {
    throw std::invalid_argument("plot needs at least one curve");
  }
  if (spec.samples < 2) {
    throw std::invalid_argument("plot needs at least two samples");
  }
  if (!(spec.omega_max > spec.omega_min)) {
    throw std::invalid_argument("plot range must be nonempty");
  }
  PlotData data;
  data.omega.resize(static_cast<std::size_t>(spec.samples));
  for (int i = 0; i < spec.samples; ++i) {
    data.omega[static_cast<std::size_t>(i)] =
        spec.omega_min +
        (spec.omega_max - spec.omega_min) * i / (spec.samples - 1);
  }
  for (const PlotCurve& curve : spec.curves) {
    if (!curve.fn) {
      throw std::invalid_argument("plot curve has no function");
    }
    std::vector<double> values(data.omega.size());
    for (std::size_t i = 0; i < data.omega.size(); ++i) {
      const std::complex<double> v = curve.fn(data.omega[i]);
      values[i] = spec.mode == PlotMode::value ? v.real() : std::abs(v);
    }
    data.values.push_back(std::move(values));
  }
  return data;
}

std::string render_svg(const PlotSpec& spec, const PlotData& data) {
  double y_min = 0.0, y_max = 0.0;
  bool first = true;
  for (const auto& curve : data.values) {
    for (double v : curve) {
      y_min = first ? v : std::min(y_min, v);
      y_max = first ? v : std::max(y_max, v);
      first = false;
    }
  }
  if (y_max - y_min < 1e-12) {
    y_min -= 1.0;
    y_max += 1.0;
  }
  const double pad = 0.08 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto x_of = [&](double w) {
    return kMarginLeft +
           plot_w * (w - spec.omega_min) / (spec.omega_max - spec.omega_min);
  };
  const auto y_of = [&](double v) {
    return kMarginTop + plot_h * (y_max - v) / (y_max - y_min);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) +
         "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) +
         " " + fmt(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(kWidth / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" +
         spec.title + "</text>\n";

  // x ticks at multiples of pi/6; labels on the coarser pi/3 comb.
  const double tick = kPi / 6.0;
  const long m_lo = static_cast<long>(std::ceil(spec.omega_min / tick - 1e-9));
  const long m_hi = static_cast<long>(std::floor(spec.omega_max / tick + 1e-9));
  const double base_y = kMarginTop + plot_h;
  for (long m = m_lo; m <= m_hi; ++m) {
    const double x = x_of(m * tick);
    svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(kMarginTop) +
           "\" x2=\"" + fmt(x) + "\" y2=\"" + fmt(base_y) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(base_y) + "\" x2=\"" +
           fmt(x) + "\" y2=\"" + fmt(base_y + 6) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (m % 2 == 0) {
      svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(base_y + 22) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"13\">" +
             pi_sixth_label(m) + "</text>\n";
    }
  }

  // y ticks on a 1/2/5 decimal comb.
  const double y_step = nice_step(y_max - y_min);
  for (double v = std::ceil(y_min / y_step) * y_step; v <= y_max + 1e-12;
       v += y_step) {
    const double y = y_of(v);
    svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(y) +
           "\" x2=\"" + fmt(kMarginLeft + plot_w) + "\" y2=\"" + fmt(y) +
           "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fmt(kMarginLeft - 8) + "\" y=\"" + fmt(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"13\">" +
           fmt_tick(std::abs(v) < 1e-12 ? 0.0 : v) + "</text>\n";
  }

  // frame
  svg += "<rect x=\"" + fmt(kMarginLeft) + "\" y=\"" + fmt(kMarginTop) +
         "\" width=\"" + fmt(plot_w) + "\" height=\"" + fmt(plot_h) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (std::size_t c = 0; c < spec.curves.size(); ++c) {
    svg += "<polyline fill=\"none\" stroke=\"" + spec.curves[c].color +
           "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < data.omega.size(); ++i) {
      if (i != 0) svg += ' ';
      svg += fmt(x_of(data.omega[i])) + "," + fmt(y_of(data.values[c][i]));
    }
    svg += "\"/>\n";
  }

  // legend
  for (std::size_t c = 0; c < spec.curves.size(); ++c) {
    const double lx = kMarginLeft + 16;
    const double ly = kMarginTop + 16 + 20 * static_cast<double>(c);
    svg += "<rect x=\"" + fmt(lx) + "\" y=\"" + fmt(ly - 9) +
           "\" width=\"18\" height=\"4\" fill=\"" + spec.curves[c].color +
           "\"/>\n";
    svg += "<text x=\"" + fmt(lx + 24) + "\" y=\"" + fmt(ly) +
           "\" font-family=\"sans-serif\" font-size=\"13\">" +
           spec.curves[c].label + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

std::string plot_csv(const PlotSpec& spec, const PlotData& data) {
  std::string out = "omega";
  for (const PlotCurve& curve : spec.curves) {
    out += ',';
    out += curve.label;
  }
  out += '\n';
  for (std::size_t i = 0; i < data.omega.size(); ++i) {
    out += format_double(data.omega[i]);
    for (std::size_t c = 0; c < data.values.size(); ++c) {
      out += ',';
      out += format_double(data.values[c][i]);
    }
    out += '\n';
  }
  return out;
}

PlotData write_plot(const PlotSpec& spec, const std::string& svg_path) {
  const PlotData data = sample_plot(spec);
  write_text_file(svg_path, render_svg(spec, data));
  std::filesystem::path sidecar(svg_path);
  sidecar.replace_extension(".csv");
  write_text_file(sidecar.string(), plot_csv(spec, data));
  return data;
}

namespace {

PlotSpec figure_preset(ClassicalBand inner_band, PlotMode mode,
                       const std::string& title, const char* label_prefix) {
  PlotSpec spec;
  spec.title = title;
  spec.omega_min = -kPi;
  spec.omega_max = kPi;
  spec.samples = 1201;
  spec.mode = mode;
  const char* colors[3] = {"red", "blue", "green"};
  for (int l = 0; l < 3; ++l) {
    PlotCurve curve;
    curve.label = std::string(label_prefix) + std::to_string(l);
    curve.color = colors[l];
    curve.fn = [inner_band, l](double w) {
      const double outer = eval_H(FrequencyDescriptor{3, l}, 2.0 * w);
      return outer * eval_H_classical2(inner_band, w);
    };
    spec.curves.push_back(std::move(curve));
  }
  return spec;
}

}  // namespace

PlotSpec fig1_preset() {
  return figure_preset(ClassicalBand::scaling, PlotMode::value,
                       "Six-band composite symbols, scaling branch", "H0");
}

PlotSpec fig2_preset() {
  return figure_preset(ClassicalBand::wavelet, PlotMode::modulus,
                       "Six-band composite symbols, wavelet branch (moduli)",
                       "H1");
}

}  // namespace meyerbank
