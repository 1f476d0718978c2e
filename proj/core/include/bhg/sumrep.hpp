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

// Incremental j-fold multiset sum tables.
//
// For a set A of distinct positive integers and an order h, table j maps each
// sum value x to the number of size-j multisets of A summing to x. Table h is
// the representation function r_A. Tables are updated in place when an element
// is added, so testing a candidate never recounts representations from scratch.

#ifndef BHG_SUMREP_HPP
#define BHG_SUMREP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bhg {

using Value = std::uint64_t;
using Count = std::uint64_t;

using SumTable = std::unordered_map<Value, Count>;

struct SumTableOptions {
  // Cap on the total number of entries stored across all tables.
  std::size_t max_entries = 50'000'000;
};

// R_s = |{x : r(x) >= s}| for s = 1..s_max.
class RepProfile {
 public:
  RepProfile() = default;
  explicit RepProfile(std::vector<std::uint64_t> counts)
      : counts_(std::move(counts)) {}

  int s_max() const noexcept { return static_cast<int>(counts_.size()); }
  // 1-based; s outside [1, s_max] yields 0.
  std::uint64_t at(int s) const noexcept {
    return s >= 1 && s <= s_max() ? counts_[static_cast<std::size_t>(s - 1)]
                                  : 0;
  }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

  friend bool operator==(const RepProfile&, const RepProfile&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

// Extra representations gained by adding candidate m: for every x,
// added(x) = sum_{k=1..h} table[h-k][x - k*m]. Entries are sorted by x and
// all nonzero.
struct CandidateDelta {
  Value m = 0;
  std::vector<std::pair<Value, Count>> added;

  Count at(Value x) const noexcept;
};

class SumTableSet {
 public:
  explicit SumTableSet(int h, SumTableOptions options = {});

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return elements_.size(); }
  // Sorted ascending.
  std::span<const Value> elements() const noexcept { return elements_; }
  bool contains(Value a) const noexcept;

  const SumTable& table(int j) const;
  std::size_t total_entries() const noexcept { return total_entries_; }

  // Throws std::invalid_argument for a = 0 or a duplicate, OverflowError on
  // 64-bit overflow, GuardExceeded when the entry cap is hit. On throw the
  // table set is left unchanged.
  void add_element(Value a);

  Count rep_count(Value x) const noexcept;
  RepProfile rep_histogram(int s_max) const;

  CandidateDelta candidate_delta(Value m) const;
  // Same as candidate_delta but reuses out's storage.
  void candidate_delta_into(Value m, CandidateDelta& out) const;

  friend bool operator==(const SumTableSet& a, const SumTableSet& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_ &&
           a.tables_ == b.tables_;
  }

 private:
  int order_;
  SumTableOptions options_;
  std::vector<Value> elements_;
  std::vector<SumTable> tables_;
  std::size_t total_entries_ = 1;
};

// Counts size-h multisets of `elements` (distinct values) that sum to x by
// direct enumeration. Independent of SumTableSet. Throws GuardExceeded if the
// number of multisets exceeds enumeration_limit.
Count brute_force_rep(std::span<const Value> elements, int h, Value x,
                      std::uint64_t enumeration_limit = 50'000'000);

// C(n + k - 1, k), saturating at UINT64_MAX.
std::uint64_t multiset_count(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace bhg

#endif  // BHG_SUMREP_HPP
