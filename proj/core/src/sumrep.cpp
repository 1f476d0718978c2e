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

#include "bhg/sumrep.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "bhg/errors.hpp"
#include "bhg/exact.hpp"

namespace bhg {

Count CandidateDelta::at(Value x) const noexcept {
  auto it = std::lower_bound(
      added.begin(), added.end(), x,
      [](const std::pair<Value, Count>& e, Value v) { return e.first < v; });
  return it != added.end() && it->first == x ? it->second : 0;
}

std::uint64_t multiset_count(std::uint64_t n, std::uint64_t k) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (k == 0) return 1;
  if (n == 0) return 0;
  // C(n+k-1, k) = prod_{i=1..k} (n-1+i)/i, exact at every prefix.
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - 1 + i) / i;
    if (acc > kMax) return kMax;
  }
  return acc.convert_to<std::uint64_t>();
}

SumTableSet::SumTableSet(int h, SumTableOptions options)
    : order_(h), options_(options) {
  if (h < 2) throw std::invalid_argument("order h must be >= 2");
  tables_.resize(static_cast<std::size_t>(h) + 1);
  tables_[0].emplace(0, 1);
}

bool SumTableSet::contains(Value a) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

const SumTable& SumTableSet::table(int j) const {
  if (j < 0 || j > order_) throw std::out_of_range("table index out of range");
  return tables_[static_cast<std::size_t>(j)];
}

void SumTableSet::add_element(Value a) {
  if (a == 0) throw std::invalid_argument("elements must be positive");
  if (contains(a)) {
    throw std::invalid_argument("duplicate element " + std::to_string(a));
  }
  const auto h = static_cast<std::size_t>(order_);

  // Every sum is at most h * max(A), every count at most C(|A|+h-1, h); check
  // both once so the in-place update below cannot overflow.
  const Value largest = elements_.empty() ? a : std::max(a, elements_.back());
  checked_mul(h, largest);
  if (multiset_count(elements_.size() + 1, h) ==
      std::numeric_limits<std::uint64_t>::max()) {
    throw OverflowError("representation counts would overflow 64 bits");
  }
  std::size_t bound = total_entries_;
  for (std::size_t j = 1; j <= h; ++j) {
    for (std::size_t k = 1; k <= j; ++k) bound += tables_[j - k].size();
  }
  if (bound > options_.max_entries) {
    throw GuardExceeded("sum tables would exceed the entry cap of " +
                        std::to_string(options_.max_entries) +
                        "; lower n or h, or raise the memory cap");
  }

  // Descending j: tables[j-k] for k >= 1 have not been touched yet.
  for (std::size_t j = h; j >= 1; --j) {
    SumTable& target = tables_[j];
    const std::size_t before = target.size();
    for (std::size_t k = 1; k <= j; ++k) {
      const Value shift = k * a;
      for (const auto& [y, c] : tables_[j - k]) target[y + shift] += c;
    }
    total_entries_ += target.size() - before;
  }
  elements_.insert(std::upper_bound(elements_.begin(), elements_.end(), a), a);
}

Count SumTableSet::rep_count(Value x) const noexcept {
  const auto& top = tables_.back();
  auto it = top.find(x);
  return it == top.end() ? 0 : it->second;
}

RepProfile SumTableSet::rep_histogram(int s_max) const {
  if (s_max < 1) throw std::invalid_argument("s_max must be >= 1");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(s_max), 0);
  for (const auto& [x, c] : tables_.back()) {
    const auto top = std::min<Count>(c, static_cast<Count>(s_max));
    for (Count s = 1; s <= top; ++s) ++counts[s - 1];
  }
  return RepProfile(std::move(counts));
}

CandidateDelta SumTableSet::candidate_delta(Value m) const {
  CandidateDelta out;
  candidate_delta_into(m, out);
  return out;
}

void SumTableSet::candidate_delta_into(Value m, CandidateDelta& out) const {
  if (m == 0) throw std::invalid_argument("candidate must be positive");
  const auto h = static_cast<std::size_t>(order_);
  const Value largest = elements_.empty() ? m : std::max(m, elements_.back());
  checked_mul(h, largest);

  out.m = m;
  auto& added = out.added;
  added.clear();
  for (std::size_t k = 1; k <= h; ++k) {
    const Value shift = k * m;
    for (const auto& [y, c] : tables_[h - k]) added.emplace_back(y + shift, c);
  }
  std::sort(added.begin(), added.end());
  // Merge equal keys in place.
  std::size_t w = 0;
  for (std::size_t r = 0; r < added.size(); ++r) {
    if (w > 0 && added[w - 1].first == added[r].first) {
      added[w - 1].second += added[r].second;
    } else {
      added[w++] = added[r];
    }
  }
  added.resize(w);
}

Count brute_force_rep(std::span<const Value> elements, int h, Value x,
                      std::uint64_t enumeration_limit) {
  if (h < 1) throw std::invalid_argument("order h must be >= 1");
  if (multiset_count(elements.size(), static_cast<std::uint64_t>(h)) >
      enumeration_limit) {
    throw GuardExceeded("brute-force enumeration limit exceeded");
  }
  std::vector<Value> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) return 0;

  // Non-decreasing index tuples; a branch stops once the running sum passes
  // x since every later element is at least as large.
  Count hits = 0;
  auto visit = [&](auto&& self, std::size_t from, int left, Value remaining) {
    if (left == 0) {
      if (remaining == 0) ++hits;
      return;
    }
    for (std::size_t i = from; i < sorted.size(); ++i) {
      if (sorted[i] > remaining) break;
      self(self, i, left - 1, remaining - sorted[i]);
    }
  };
  visit(visit, 0, h, x);
  return hits;
}

}  // namespace bhg
