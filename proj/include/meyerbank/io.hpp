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

#ifndef MEYERBANK_IO_HPP
#define MEYERBANK_IO_HPP

#include <stdexcept>
#include <string>

#include "meyerbank/filter_bank.hpp"
#include "meyerbank/transform.hpp"
#include "meyerbank/verify.hpp"

// Serialization. Emission uses a fixed field order and 17 significant
// digits for floats, so output is deterministic and round-trips doubles
// exactly. Parsing is strict: wrong types or missing fields raise
// ParseError.
namespace meyerbank {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// { "factor": N, "provenance": "...", "bands": [ { "band": k,
//   "offset": o, "re": [...], "im": [...], "tail_energy": t } ] }
std::string bank_to_json(const FilterBank& bank);
FilterBank bank_from_json(const std::string& text);

// { "factor": N, "bands": [ [[re, im], ...], ... ] }
std::string coefficients_to_json(const CoefficientSet& coeffs);
CoefficientSet coefficients_from_json(const std::string& text);

// { "factor": ..., "grid_size": ..., "max_unitarity_defect": ...,
//   "per_row_norm_defect": [...], "adjacent_row_orthogonality_defect":
//   [...], "pass": ..., "tolerance": ... }
std::string report_to_json(const VerificationReport& report);

// { "factor": ..., "levels": ..., "signal_length": ...,
//   "approximation": [[re, im], ...], "details": [level][band][[re, im]] }
std::string multilevel_to_json(const MultilevelDecomposition& pyramid);
MultilevelDecomposition multilevel_from_json(const std::string& text);

// One sample per line, `re` or `re,im`. Blank lines and lines starting
// with '#' are skipped. Writing always emits both columns.
Signal signal_from_csv(const std::string& text);
std::string signal_to_csv(const Signal& x);

// File helpers; open/read/write failures raise ParseError with the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

FilterBank load_bank(const std::string& path);
void save_bank(const std::string& path, const FilterBank& bank);
Signal load_signal(const std::string& path);
void save_signal(const std::string& path, const Signal& x);
CoefficientSet load_coefficients(const std::string& path);
void save_coefficients(const std::string& path, const CoefficientSet& coeffs);

// Shortest-retaining fixed format used by every emitter ("%.17g").
std::string format_double(double v);

}  // namespace meyerbank

#endif  // MEYERBANK_IO_HPP
