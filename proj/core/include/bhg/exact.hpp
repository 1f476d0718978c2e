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

// Exact integer helpers: checked 64-bit arithmetic and arbitrary-precision
// powers and roots used for fractional-exponent comparisons.

#ifndef BHG_EXACT_HPP
#define BHG_EXACT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "bhg/errors.hpp"

namespace bhg {

using BigInt = boost::multiprecision::cpp_int;

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in addition; lower n or h");
  }
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in multiplication; lower n or h");
  }
  return r;
}

BigInt big_pow(const BigInt& base, unsigned exponent);

// Largest r with r^k <= v. Requires k >= 1 and v >= 0.
BigInt floor_root(const BigInt& v, unsigned k);

// Saturating conversion; values above 2^64-1 map to UINT64_MAX.
std::uint64_t saturate_u64(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace bhg

#endif  // BHG_EXACT_HPP
