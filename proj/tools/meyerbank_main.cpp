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

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>

#include "meyerbank/io.hpp"
#include "meyerbank/kernels.hpp"
#include "meyerbank/plot.hpp"
#include "meyerbank/synthesis.hpp"
#include "meyerbank/transform.hpp"
#include "meyerbank/verify.hpp"

// Exit codes: 0 success/pass, 1 verification fail, 2 malformed or
// unreadable input, 3 precondition violation.
namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;

// Tail mass beyond this radius flags a slowly decaying band (the direct
// even-N designs); smooth bands sit around 1e-13 here.
constexpr int kDecayWarnRadius = 200;
constexpr double kDecayWarnThreshold = 1e-8;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

struct SynthesizeOptions {
  int factor = 0;
  int samples = meyerbank::kDefaultSampleCount;
  double threshold = meyerbank::kDefaultThreshold;
  bool classical2 = false;
  std::string out;
};

int run_synthesize(const SynthesizeOptions& opt) {
  if (opt.classical2 && opt.factor != 2) {
    throw std::invalid_argument(
        "--classical2 applies only to --factor 2 (and is its default)");
  }
  const meyerbank::FilterBank bank =
      meyerbank::synthesize_bank(opt.factor, opt.samples, opt.threshold);

  double max_tail = 0.0;
  for (const auto& f : bank.filters) {
    max_tail = std::max(max_tail, f.tail_energy);
    const double slow = meyerbank::tail_energy_outside(f, kDecayWarnRadius);
    if (slow > kDecayWarnThreshold) {
      std::cerr << "warning: band " << f.band << " keeps " << sci(slow)
                << " of its energy outside |n| <= " << kDecayWarnRadius
                << "; direct even factors decay slowly. Consider building "
                   "factor "
                << opt.factor
                << " as a composition of smaller factors (see 'compose').\n";
    }
  }

  meyerbank::save_bank(opt.out, bank);
  std::cout << "wrote " << bank.provenance << " bank: " << bank.factor
            << " bands, max tail_energy " << sci(max_tail) << ", "
            << opt.out << "\n";
  return kExitPass;
}

struct ComposeOptions {
  std::string outer, inner, out;
};

int run_compose(const ComposeOptions& opt) {
  const meyerbank::FilterBank outer = meyerbank::load_bank(opt.outer);
  const meyerbank::FilterBank inner = meyerbank::load_bank(opt.inner);
  const meyerbank::FilterBank bank = meyerbank::compose_banks(outer, inner);
  meyerbank::save_bank(opt.out, bank);
  std::cout << "wrote " << bank.provenance << " bank: " << bank.factor
            << " bands, " << opt.out << "\n";
  return kExitPass;
}

struct VerifyOptions {
  std::string bank;
  int grid = 1024;
  double tolerance = 1e-6;
  std::string report;
};

int run_verify(const VerifyOptions& opt) {
  const meyerbank::FilterBank bank = meyerbank::load_bank(opt.bank);
  const meyerbank::VerificationReport report =
      meyerbank::verify_bank(bank, opt.grid, opt.tolerance);
  if (!opt.report.empty()) {
    meyerbank::write_text_file(opt.report, meyerbank::report_to_json(report));
  }
  std::cout << "factor=" << report.factor << " grid=" << report.grid_size
            << " max_defect=" << sci(report.max_unitarity_defect)
            << " tolerance=" << sci(report.tolerance) << " "
            << (report.pass ? "PASS" : "FAIL") << "\n";
  return report.pass ? kExitPass : kExitVerifyFail;
}

struct TransformOptions {
  std::string bank;
  std::string signal;
  std::string coeffs;
  std::string out;
  std::string reference;
  int levels = 1;
  bool pad = false;
};

meyerbank::Signal load_padded_signal(const std::string& path, int factor,
                                     bool pad) {
  meyerbank::Signal x = meyerbank::load_signal(path);
  if (pad && !x.empty() && x.size() % static_cast<std::size_t>(factor) != 0) {
    const std::size_t padded =
        (x.size() / static_cast<std::size_t>(factor) + 1) *
        static_cast<std::size_t>(factor);
    std::cout << "padded signal from " << x.size() << " to " << padded
              << " samples (zeros; reconstruction returns the padded "
                 "length)\n";
    x.resize(padded, {0.0, 0.0});
  }
  return x;
}

int run_decompose(const TransformOptions& opt) {
  const meyerbank::FilterBank bank = meyerbank::load_bank(opt.bank);
  const meyerbank::Signal x =
      load_padded_signal(opt.signal, bank.factor, opt.pad);
  const meyerbank::CoefficientSet coeffs = meyerbank::decompose(x, bank);
  meyerbank::save_coefficients(opt.out, coeffs);
  std::cout << "decomposed " << x.size() << " samples into " << coeffs.factor
            << " bands of " << coeffs.bands[0].size() << ", " << opt.out
            << "\n";
  return kExitPass;
}

int run_reconstruct(const TransformOptions& opt) {
  const meyerbank::FilterBank bank = meyerbank::load_bank(opt.bank);
  const meyerbank::CoefficientSet coeffs =
      meyerbank::load_coefficients(opt.coeffs);
  const meyerbank::Signal y = meyerbank::reconstruct(coeffs, bank);
  meyerbank::save_signal(opt.out, y);
  std::cout << "reconstructed " << y.size() << " samples, " << opt.out << "\n";
  if (!opt.reference.empty()) {
    const meyerbank::Signal x = meyerbank::load_signal(opt.reference);
    if (x.size() != y.size()) {
      throw std::invalid_argument(
          "reference length does not match reconstruction");
    }
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      num += std::norm(y[i] - x[i]);
      den += std::norm(x[i]);
    }
    const double rel = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
    std::cout << "round-trip relative error vs " << opt.reference << ": "
              << sci(rel) << "\n";
  }
  return kExitPass;
}

int run_multilevel(const TransformOptions& opt) {
  const meyerbank::FilterBank bank = meyerbank::load_bank(opt.bank);
  const meyerbank::Signal x =
      load_padded_signal(opt.signal, bank.factor, opt.pad);
  const meyerbank::MultilevelDecomposition pyramid =
      meyerbank::multilevel_decompose(x, bank, opt.levels);
  meyerbank::write_text_file(opt.out, meyerbank::multilevel_to_json(pyramid));
  std::cout << "decomposed " << x.size() << " samples over " << pyramid.levels
            << " level(s); approximation length "
            << pyramid.approximation.size() << ", " << opt.out << "\n";
  return kExitPass;
}

struct DecayOptions {
  std::string bank;
  int band = -1;  // all bands
  std::string out;
};

int run_decay(const DecayOptions& opt) {
  const meyerbank::FilterBank bank = meyerbank::load_bank(opt.bank);
  if (opt.band >= bank.factor) {
    throw std::invalid_argument("band index outside this bank");
  }
  std::string csv = "band,radius,tail_energy\n";
  for (const auto& f : bank.filters) {
    if (opt.band >= 0 && f.band != opt.band) continue;
    for (const auto& [radius, tail] : meyerbank::decay_profile(f)) {
      csv += std::to_string(f.band) + "," + std::to_string(radius) + "," +
             meyerbank::format_double(tail) + "\n";
    }
  }
  if (opt.out.empty()) {
    std::cout << csv;
  } else {
    meyerbank::write_text_file(opt.out, csv);
    std::cout << "wrote decay profile, " << opt.out << "\n";
  }
  return kExitPass;
}

struct PlotOptions {
  std::string preset;
  std::string bank;
  std::vector<int> bands;
  int samples = 0;  // 0: keep preset default / 1201 for bank plots
  std::string out;
};

int run_plot(const PlotOptions& opt) {
  meyerbank::PlotSpec spec;
  if (!opt.preset.empty()) {
    if (!opt.bank.empty()) {
      throw std::invalid_argument("--preset and --bank are exclusive");
    }
    if (opt.preset == "fig1") {
      spec = meyerbank::fig1_preset();
    } else if (opt.preset == "fig2") {
      spec = meyerbank::fig2_preset();
    } else {
      throw std::invalid_argument("unknown preset (use fig1 or fig2)");
    }
  } else if (!opt.bank.empty()) {
    // Generic view of a stored bank: band transfer moduli.
    auto bank = std::make_shared<meyerbank::FilterBank>(
        meyerbank::load_bank(opt.bank));
    spec.title = "Band transfer moduli, " + bank->provenance;
    spec.omega_min = -3.14159265358979312;
    spec.omega_max = 3.14159265358979312;
    spec.samples = 1201;
    spec.mode = meyerbank::PlotMode::modulus;
    const char* colors[6] = {"red", "blue", "green", "orange", "purple",
                             "teal"};
    std::vector<int> bands = opt.bands;
    if (bands.empty()) {
      for (int k = 0; k < bank->factor; ++k) bands.push_back(k);
    }
    for (std::size_t i = 0; i < bands.size(); ++i) {
      const int k = bands[i];
      if (k < 0 || k >= bank->factor) {
        throw std::invalid_argument("band index outside this bank");
      }
      meyerbank::PlotCurve curve;
      curve.label = "band" + std::to_string(k);
      curve.color = colors[i % 6];
      curve.fn = [bank, k](double w) {
        return meyerbank::eval_dtft(
            bank->filters[static_cast<std::size_t>(k)], w);
      };
      spec.curves.push_back(std::move(curve));
    }
  } else {
    throw std::invalid_argument("plot needs --preset or --bank");
  }
  if (opt.samples > 0) spec.samples = opt.samples;
  meyerbank::write_plot(spec, opt.out);
  std::filesystem::path sidecar(opt.out);
  sidecar.replace_extension(".csv");
  std::cout << "wrote " << opt.out << " and " << sidecar.string() << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meyer-type N-band orthogonal filter banks: synthesis, "
               "verification, transforms, plots"};
  app.require_subcommand(1);

  SynthesizeOptions syn;
  CLI::App* c_syn =
      app.add_subcommand("synthesize", "Build a factor-N bank and save JSON");
  c_syn->add_option("--factor", syn.factor, "Scaling factor N >= 2")
      ->required();
  c_syn->add_option("--samples", syn.samples,
                    "DFT size (power of two >= 256)");
  c_syn->add_option("--threshold", syn.threshold,
                    "Truncation threshold in (0,1)");
  c_syn->add_flag("--classical2", syn.classical2,
                  "Two-band classical design (default for --factor 2)");
  c_syn->add_option("--out", syn.out, "Output bank JSON path")->required();

  ComposeOptions cmp;
  CLI::App* c_cmp = app.add_subcommand(
      "compose", "Combine an outer M-bank and inner N-bank into factor MN");
  c_cmp->add_option("--outer", cmp.outer, "Outer (second stage) bank JSON")
      ->required();
  c_cmp->add_option("--inner", cmp.inner, "Inner (first stage) bank JSON")
      ->required();
  c_cmp->add_option("--out", cmp.out, "Output bank JSON path")->required();

  VerifyOptions ver;
  CLI::App* c_ver = app.add_subcommand(
      "verify", "Check modulation-matrix unitarity on a frequency grid");
  c_ver->add_option("--bank", ver.bank, "Bank JSON path")->required();
  c_ver->add_option("--grid", ver.grid, "Grid size (>= 64)");
  c_ver->add_option("--tolerance", ver.tolerance, "Max defect to pass");
  c_ver->add_option("--report", ver.report, "Write report JSON here");

  TransformOptions dec;
  CLI::App* c_dec =
      app.add_subcommand("decompose", "Split a signal into N bands");
  c_dec->add_option("--bank", dec.bank, "Bank JSON path")->required();
  c_dec->add_option("--signal", dec.signal, "Input CSV (re or re,im lines)")
      ->required();
  c_dec->add_option("--out", dec.out, "Output coefficient JSON")->required();
  c_dec->add_flag("--pad", dec.pad,
                  "Zero-pad to the next multiple of the factor (round trip "
                  "then returns the padded signal, not the original)");

  TransformOptions rec;
  CLI::App* c_rec =
      app.add_subcommand("reconstruct", "Rebuild a signal from coefficients");
  c_rec->add_option("--bank", rec.bank, "Bank JSON path")->required();
  c_rec->add_option("--coeffs", rec.coeffs, "Coefficient JSON path")
      ->required();
  c_rec->add_option("--out", rec.out, "Output signal CSV")->required();
  c_rec->add_option("--reference", rec.reference,
                    "Optional original signal CSV; prints round-trip error");

  TransformOptions mul;
  CLI::App* c_mul = app.add_subcommand(
      "multilevel", "Iterate the band-0 split into a pyramid");
  c_mul->add_option("--bank", mul.bank, "Bank JSON path")->required();
  c_mul->add_option("--signal", mul.signal, "Input CSV")->required();
  c_mul->add_option("--levels", mul.levels, "Level count (>= 1)")->required();
  c_mul->add_option("--out", mul.out, "Output pyramid JSON")->required();
  c_mul->add_flag("--pad", mul.pad, "Zero-pad to the next factor multiple");

  DecayOptions dcy;
  CLI::App* c_dcy = app.add_subcommand(
      "decay", "Tail-energy profile per band (CSV: band,radius,tail_energy)");
  c_dcy->add_option("--bank", dcy.bank, "Bank JSON path")->required();
  c_dcy->add_option("--band", dcy.band, "Single band (default: all)");
  c_dcy->add_option("--out", dcy.out, "Output CSV (default: stdout)");

  PlotOptions plt;
  CLI::App* c_plt = app.add_subcommand(
      "plot", "Emit an SVG chart plus a CSV sidecar of the sampled values");
  c_plt->add_option("--preset", plt.preset,
                    "fig1 (scaling-branch values) or fig2 (wavelet-branch "
                    "moduli) of the 3x2 composite symbols");
  c_plt->add_option("--bank", plt.bank, "Plot band transfers of this bank");
  c_plt->add_option("--bands", plt.bands, "Band indices for --bank")
      ->delimiter(',');
  c_plt->add_option("--samples", plt.samples, "Sample count (>= 2)");
  c_plt->add_option("--out", plt.out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitBadInput;
  }

  try {
    if (c_syn->parsed()) return run_synthesize(syn);
    if (c_cmp->parsed()) return run_compose(cmp);
    if (c_ver->parsed()) return run_verify(ver);
    if (c_dec->parsed()) return run_decompose(dec);
    if (c_rec->parsed()) return run_reconstruct(rec);
    if (c_mul->parsed()) return run_multilevel(mul);
    if (c_dcy->parsed()) return run_decay(dcy);
    if (c_plt->parsed()) return run_plot(plt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitPass;
}
