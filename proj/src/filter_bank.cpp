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

#include "meyerbank/filter_bank.hpp"

#include <stdexcept>

#include "meyerbank/kernels.hpp"

namespace meyerbank {

double Filter::energy() const {
  return kernels::sum_sq_mag(coeffs.data(), coeffs.size());
}

std::string direct_provenance(int factor) {
  return "direct(" + std::to_string(factor) + ")";
}

std::string composite_provenance(int outer_factor, int inner_factor) {
  return "composite(" + std::to_string(outer_factor) + "," +
         std::to_string(inner_factor) + ")";
}

std::string classical2_provenance() { return "classical2"; }

void validate_bank(const FilterBank& bank) {
  if (bank.factor < 2) {
    throw std::invalid_argument("filter bank requires factor >= 2");
  }
  if (bank.filters.size() != static_cast<std::size_t>(bank.factor)) {
    throw std::invalid_argument(
        "filter bank must hold exactly one filter per band");
  }
}

}  // namespace meyerbank
