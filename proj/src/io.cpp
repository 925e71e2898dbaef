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

#include "meyerbank/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

namespace meyerbank {
namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError("malformed JSON document");
  }
  return doc;
}

const json& require_field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw ParseError(std::string("missing JSON field: ") + name);
  }
  return obj.at(name);
}

int require_int(const json& obj, const char* name) {
  const json& v = require_field(obj, name);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("JSON field must be an integer: ") + name);
  }
  return v.get<int>();
}

double require_number(const json& obj, const char* name) {
  const json& v = require_field(obj, name);
  if (!v.is_number()) {
    throw ParseError(std::string("JSON field must be a number: ") + name);
  }
  return v.get<double>();
}

std::string require_string(const json& obj, const char* name) {
  const json& v = require_field(obj, name);
  if (!v.is_string()) {
    throw ParseError(std::string("JSON field must be a string: ") + name);
  }
  return v.get<std::string>();
}

std::vector<double> require_number_array(const json& obj, const char* name) {
  const json& v = require_field(obj, name);
  if (!v.is_array()) {
    throw ParseError(std::string("JSON field must be an array: ") + name);
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_number()) {
      throw ParseError(std::string("array elements must be numbers: ") + name);
    }
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<std::complex<double>> parse_pair_array(const json& arr,
                                                   const char* what) {
  if (!arr.is_array()) {
    throw ParseError(std::string(what) + " must be an array");
  }
  std::vector<std::complex<double>> out;
  out.reserve(arr.size());
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number()) {
      throw ParseError(std::string(what) +
                       " entries must be [re, im] number pairs");
    }
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

void append_double(std::string& out, double v) { out += format_double(v); }

void append_pair_array(std::string& out,
                       const std::vector<std::complex<double>>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += '[';
    append_double(out, values[i].real());
    out += ',';
    append_double(out, values[i].imag());
    out += ']';
  }
  out += ']';
}

void append_double_array(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    append_double(out, values[i]);
  }
  out += ']';
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string bank_to_json(const FilterBank& bank) {
  std::string out;
  out += "{\n  \"factor\": " + std::to_string(bank.factor) + ",\n";
  out += "  \"provenance\": \"" + bank.provenance + "\",\n";
  out += "  \"bands\": [\n";
  for (std::size_t k = 0; k < bank.filters.size(); ++k) {
    const Filter& f = bank.filters[k];
    out += "    {\"band\": " + std::to_string(f.band) +
           ", \"offset\": " + std::to_string(f.offset) + ", \"re\": ";
    std::vector<double> re(f.coeffs.size()), im(f.coeffs.size());
    for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
      re[j] = f.coeffs[j].real();
      im[j] = f.coeffs[j].imag();
    }
    append_double_array(out, re);
    out += ", \"im\": ";
    append_double_array(out, im);
    out += ", \"tail_energy\": ";
    append_double(out, f.tail_energy);
    out += '}';
    if (k + 1 != bank.filters.size()) out += ',';
    out += '\n';
  }
  out += "  ]\n}\n";
  return out;
}

FilterBank bank_from_json(const std::string& text) {
  const json doc = parse_json(text);
  FilterBank bank;
  bank.factor = require_int(doc, "factor");
  bank.provenance = require_string(doc, "provenance");
  if (bank.factor < 2) {
    throw ParseError("bank factor must be >= 2");
  }
  const json& bands = require_field(doc, "bands");
  if (!bands.is_array() ||
      bands.size() != static_cast<std::size_t>(bank.factor)) {
    throw ParseError("bands must be an array with one entry per band");
  }
  bank.filters.assign(static_cast<std::size_t>(bank.factor), Filter{});
  std::vector<bool> seen(static_cast<std::size_t>(bank.factor), false);
  for (const json& entry : bands) {
    const int band = require_int(entry, "band");
    if (band < 0 || band >= bank.factor ||
        seen[static_cast<std::size_t>(band)]) {
      throw ParseError("band indices must cover 0..factor-1 exactly once");
    }
    seen[static_cast<std::size_t>(band)] = true;
    Filter f;
    f.band = band;
    f.factor = bank.factor;
    f.offset = require_int(entry, "offset");
    const std::vector<double> re = require_number_array(entry, "re");
    const std::vector<double> im = require_number_array(entry, "im");
    if (re.size() != im.size() || re.empty()) {
      throw ParseError("re and im arrays must be non-empty and equal length");
    }
    f.coeffs.resize(re.size());
    for (std::size_t j = 0; j < re.size(); ++j) {
      f.coeffs[j] = {re[j], im[j]};
    }
    f.tail_energy = require_number(entry, "tail_energy");
    f.sample_count = 0;  // not serialized
    bank.filters[static_cast<std::size_t>(band)] = std::move(f);
  }
  return bank;
}

std::string coefficients_to_json(const CoefficientSet& coeffs) {
  std::string out;
  out += "{\n  \"factor\": " + std::to_string(coeffs.factor) + ",\n";
  out += "  \"bands\": [\n";
  for (std::size_t k = 0; k < coeffs.bands.size(); ++k) {
    out += "    ";
    append_pair_array(out, coeffs.bands[k]);
    if (k + 1 != coeffs.bands.size()) out += ',';
    out += '\n';
  }
  out += "  ]\n}\n";
  return out;
}

CoefficientSet coefficients_from_json(const std::string& text) {
  const json doc = parse_json(text);
  CoefficientSet coeffs;
  coeffs.factor = require_int(doc, "factor");
  if (coeffs.factor < 2) {
    throw ParseError("coefficient factor must be >= 2");
  }
  const json& bands = require_field(doc, "bands");
  if (!bands.is_array() ||
      bands.size() != static_cast<std::size_t>(coeffs.factor)) {
    throw ParseError("bands must be an array with one entry per band");
  }
  for (const json& band : bands) {
    coeffs.bands.push_back(parse_pair_array(band, "coefficient band"));
  }
  for (const auto& band : coeffs.bands) {
    if (band.size() != coeffs.bands[0].size() || band.empty()) {
      throw ParseError("coefficient bands must be non-empty and equal length");
    }
  }
  return coeffs;
}

std::string report_to_json(const VerificationReport& report) {
  std::string out;
  out += "{\n  \"factor\": " + std::to_string(report.factor) + ",\n";
  out += "  \"grid_size\": " + std::to_string(report.grid_size) + ",\n";
  out += "  \"max_unitarity_defect\": ";
  append_double(out, report.max_unitarity_defect);
  out += ",\n  \"per_row_norm_defect\": ";
  append_double_array(out, report.per_row_norm_defect);
  out += ",\n  \"adjacent_row_orthogonality_defect\": ";
  append_double_array(out, report.adjacent_row_orthogonality_defect);
  out += ",\n  \"pass\": ";
  out += report.pass ? "true" : "false";
  out += ",\n  \"tolerance\": ";
  append_double(out, report.tolerance);
  out += "\n}\n";
  return out;
}

std::string multilevel_to_json(const MultilevelDecomposition& pyramid) {
  std::string out;
  out += "{\n  \"factor\": " + std::to_string(pyramid.factor) + ",\n";
  out += "  \"levels\": " + std::to_string(pyramid.levels) + ",\n";
  out += "  \"signal_length\": " + std::to_string(pyramid.signal_length) +
         ",\n";
  out += "  \"approximation\": ";
  append_pair_array(out, pyramid.approximation);
  out += ",\n  \"details\": [\n";
  for (std::size_t j = 0; j < pyramid.details.size(); ++j) {
    out += "    [\n";
    for (std::size_t k = 0; k < pyramid.details[j].size(); ++k) {
      out += "      ";
      append_pair_array(out, pyramid.details[j][k]);
      if (k + 1 != pyramid.details[j].size()) out += ',';
      out += '\n';
    }
    out += "    ]";
    if (j + 1 != pyramid.details.size()) out += ',';
    out += '\n';
  }
  out += "  ]\n}\n";
  return out;
}

MultilevelDecomposition multilevel_from_json(const std::string& text) {
  const json doc = parse_json(text);
  MultilevelDecomposition pyramid;
  pyramid.factor = require_int(doc, "factor");
  pyramid.levels = require_int(doc, "levels");
  const int length = require_int(doc, "signal_length");
  if (pyramid.factor < 2 || pyramid.levels < 1 || length < 1) {
    throw ParseError("multilevel header fields out of range");
  }
  pyramid.signal_length = static_cast<std::size_t>(length);
  pyramid.approximation =
      parse_pair_array(require_field(doc, "approximation"), "approximation");
  const json& details = require_field(doc, "details");
  if (!details.is_array() ||
      details.size() != static_cast<std::size_t>(pyramid.levels)) {
    throw ParseError("details must hold one entry per level");
  }
  for (const json& level : details) {
    if (!level.is_array() ||
        level.size() != static_cast<std::size_t>(pyramid.factor - 1)) {
      throw ParseError("each level must hold factor-1 detail bands");
    }
    std::vector<std::vector<std::complex<double>>> bands;
    for (const json& band : level) {
      bands.push_back(parse_pair_array(band, "detail band"));
    }
    pyramid.details.push_back(std::move(bands));
  }
  return pyramid;
}

Signal signal_from_csv(const std::string& text) {
  Signal out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(
        pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos || line[begin] == '#') continue;

    const char* cursor = line.c_str() + begin;
    char* end = nullptr;
    const double re = std::strtod(cursor, &end);
    if (end == cursor) {
      throw ParseError("CSV line " + std::to_string(line_no) +
                       ": expected a number");
    }
    cursor = end;
    while (*cursor == ' ' || *cursor == '\t') ++cursor;
    double im = 0.0;
    if (*cursor == ',') {
      ++cursor;
      im = std::strtod(cursor, &end);
      if (end == cursor) {
        throw ParseError("CSV line " + std::to_string(line_no) +
                         ": expected a second number after ','");
      }
      cursor = end;
      while (*cursor == ' ' || *cursor == '\t') ++cursor;
    }
    if (*cursor != '\0') {
      throw ParseError("CSV line " + std::to_string(line_no) +
                       ": trailing characters");
    }
    out.emplace_back(re, im);
  }
  return out;
}

std::string signal_to_csv(const Signal& x) {
  std::string out;
  for (const auto& v : x) {
    out += format_double(v.real());
    out += ',';
    out += format_double(v.imag());
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    throw ParseError("cannot read file: " + path);
  }
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot open file for writing: " + path);
  }
  out << content;
  out.flush();
  if (!out) {
    throw ParseError("cannot write file: " + path);
  }
}

FilterBank load_bank(const std::string& path) {
  return bank_from_json(read_text_file(path));
}

void save_bank(const std::string& path, const FilterBank& bank) {
  write_text_file(path, bank_to_json(bank));
}

Signal load_signal(const std::string& path) {
  return signal_from_csv(read_text_file(path));
}

void save_signal(const std::string& path, const Signal& x) {
  write_text_file(path, signal_to_csv(x));
}

CoefficientSet load_coefficients(const std::string& path) {
  return coefficients_from_json(read_text_file(path));
}

void save_coefficients(const std::string& path, const CoefficientSet& coeffs) {
  write_text_file(path, coefficients_to_json(coeffs));
}

}  // namespace meyerbank
