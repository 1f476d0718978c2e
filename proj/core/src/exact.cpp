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

#include "bhg/exact.hpp"

#include <limits>
#include <stdexcept>

namespace bhg {

BigInt big_pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigInt floor_root(const BigInt& v, unsigned k) {
  if (k == 0) throw std::invalid_argument("floor_root: k must be >= 1");
  if (v < 0) throw std::invalid_argument("floor_root: negative radicand");
  if (k == 1 || v < 2) return v;
  // Bracket by bit length, then bisect.
  const auto bits = boost::multiprecision::msb(v) + 1;
  BigInt lo = 1;
  BigInt hi = BigInt(1) << (bits / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) >> 1;
    if (big_pow(mid, k) <= v) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::uint64_t saturate_u64(const BigInt& v) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (v <= 0) return 0;
  if (v >= BigInt(kMax)) return kMax;
  return v.convert_to<std::uint64_t>();
}

}  // namespace bhg
