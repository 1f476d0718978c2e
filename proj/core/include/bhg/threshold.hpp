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

// Exact comparisons against fractional powers n^{p/q}.
//
// A count c satisfies c <= n^{p/q} iff c^q <= n^p, which is decided in
// arbitrary precision. For repeated comparisons against one threshold the
// integer floor(n^{p/q}) is precomputed; for integer c the two tests agree.

#ifndef BHG_THRESHOLD_HPP
#define BHG_THRESHOLD_HPP

#include <cstdint>
#include <string>

#include "bhg/exact.hpp"

namespace bhg {

// coefficient * base^{numerator/denominator}
class Threshold {
 public:
  Threshold(std::uint64_t coefficient, std::uint64_t base,
            std::uint64_t numerator, unsigned denominator);

  // Definition-1 condition ii threshold n^{h+(1-s)(h-1)/g}, 1 <= s <= g.
  static Threshold strong_condition(std::uint64_t n, int h, int g, int s);

  std::uint64_t coefficient() const noexcept { return coefficient_; }
  std::uint64_t base() const noexcept { return base_; }
  std::uint64_t numerator() const noexcept { return numerator_; }
  unsigned denominator() const noexcept { return denominator_; }

  // value <= threshold, exactly.
  bool admits(const BigInt& value) const;

  // floor(coefficient * base^{numerator/denominator}).
  const BigInt& floor() const noexcept { return floor_; }
  std::uint64_t floor_u64() const noexcept { return saturate_u64(floor_); }

  // e.g. "4*3^(5/2)".
  std::string to_string() const;

 private:
  // coefficient^denominator * base^numerator
  BigInt raised() const;

  std::uint64_t coefficient_;
  std::uint64_t base_;
  std::uint64_t numerator_;
  unsigned denominator_;
  BigInt floor_;
};

// count <= n^{h+(1-s)(h-1)/g}, decided by count^g <= n^{hg+(1-s)(h-1)}.
bool threshold_leq(std::uint64_t count, std::uint64_t n, int h, int g, int s);

// The growth ceiling 2g * n^{h+(h-1)/g}.
class TheoremBound {
 public:
  TheoremBound(std::uint64_t n, int h, int g);

  // value <= 2g n^{h+(h-1)/g}, i.e. value^g <= (2g)^g n^{hg+h-1}.
  bool admits(const BigInt& value) const { return ceiling_.admits(value); }
  const BigInt& floor() const noexcept { return ceiling_.floor(); }
  std::uint64_t floor_u64() const noexcept { return ceiling_.floor_u64(); }
  const Threshold& threshold() const noexcept { return ceiling_; }

 private:
  Threshold ceiling_;
};

TheoremBound theorem_bound(std::uint64_t n, int h, int g);

}  // namespace bhg

#endif  // BHG_THRESHOLD_HPP
