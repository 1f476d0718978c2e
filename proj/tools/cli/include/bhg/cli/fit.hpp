// Copyright 2026 The bhg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BHG_CLI_FIT_HPP
#define BHG_CLI_FIT_HPP

#include <cstddef>
#include <span>

#include "bhg/sumrep.hpp"

namespace bhg::cli {

struct GrowthFit {
  double slope = 0.0;      // fitted exponent in a_n ~ C n^slope
  double intercept = 0.0;  // log C
  std::size_t first_n = 0;
  std::size_t points = 0;
};

// Least-squares line through (log n, log a_n) over the last ceil(N/2) terms.
// Descriptive only. Throws std::invalid_argument for fewer than 8 terms or a
// degenerate tail (all tail terms equal).
GrowthFit fit_growth_exponent(std::span<const Value> terms);

}  // namespace bhg::cli

#endif  // BHG_CLI_FIT_HPP
