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

#include "bhg/cli/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bhg::cli {

GrowthFit fit_growth_exponent(std::span<const Value> terms) {
  constexpr std::size_t kMinTerms = 8;
  if (terms.size() < kMinTerms) {
    throw std::invalid_argument("fit needs at least 8 terms");
  }
  const std::size_t start = terms.size() / 2;
  const auto tail = terms.subspan(start);
  if (std::all_of(tail.begin(), tail.end(),
                  [&](Value v) { return v == tail.front(); })) {
    throw std::invalid_argument("degenerate input: tail terms are constant");
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail[i] == 0) throw std::invalid_argument("terms must be positive");
    const double x = std::log(static_cast<double>(start + i + 1));
    const double y = std::log(static_cast<double>(tail[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const auto k = static_cast<double>(tail.size());
  const double denom = k * sxx - sx * sx;
  GrowthFit fit;
  fit.slope = (k * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / k;
  fit.first_n = start + 1;
  fit.points = tail.size();
  return fit;
}

}  // namespace bhg::cli
