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

#include "bhg/threshold.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace bhg {

Threshold::Threshold(std::uint64_t coefficient, std::uint64_t base,
                     std::uint64_t numerator, unsigned denominator)
    : coefficient_(coefficient),
      base_(base),
      numerator_(numerator),
      denominator_(denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  if (numerator > std::numeric_limits<unsigned>::max()) {
    throw std::invalid_argument("exponent numerator too large");
  }
  floor_ = floor_root(raised(), denominator_);
}

Threshold Threshold::strong_condition(std::uint64_t n, int h, int g, int s) {
  if (h < 2 || g < 1) throw std::invalid_argument("need h >= 2 and g >= 1");
  if (s < 1 || s > g) throw std::invalid_argument("need 1 <= s <= g");
  // h*g + (1-s)(h-1) >= h + g - 1 > 0 on the allowed range.
  const auto num = static_cast<std::uint64_t>(h * g - (s - 1) * (h - 1));
  return Threshold(1, n, num, static_cast<unsigned>(g));
}

BigInt Threshold::raised() const {
  return big_pow(BigInt(coefficient_), denominator_) *
         big_pow(BigInt(base_), static_cast<unsigned>(numerator_));
}

bool Threshold::admits(const BigInt& value) const {
  if (value < 0) return true;
  return big_pow(value, denominator_) <= raised();
}

std::string Threshold::to_string() const {
  std::string out;
  if (coefficient_ != 1) out = std::to_string(coefficient_) + "*";
  out += std::to_string(base_) + "^";
  const std::uint64_t d = std::gcd(numerator_, std::uint64_t{denominator_});
  const std::uint64_t num = numerator_ / d;
  const std::uint64_t den = denominator_ / d;
  if (den == 1) {
    out += std::to_string(num);
  } else {
    out += "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
  }
  return out;
}

bool threshold_leq(std::uint64_t count, std::uint64_t n, int h, int g, int s) {
  if (s < 1 || s > g) throw std::invalid_argument("need 1 <= s <= g");
  const auto exponent = static_cast<unsigned>(h * g - (s - 1) * (h - 1));
  return big_pow(BigInt(count), static_cast<unsigned>(g)) <=
         big_pow(BigInt(n), exponent);
}

TheoremBound::TheoremBound(std::uint64_t n, int h, int g)
    : ceiling_(2 * static_cast<std::uint64_t>(g), n,
               static_cast<std::uint64_t>(h * g + h - 1),
               static_cast<unsigned>(g)) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (h < 2 || g < 1) throw std::invalid_argument("need h >= 2 and g >= 1");
}

TheoremBound theorem_bound(std::uint64_t n, int h, int g) {
  return TheoremBound(n, h, g);
}

}  // namespace bhg
