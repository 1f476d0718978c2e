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

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "bhg/errors.hpp"
#include "bhg/sumrep.hpp"
#include "oracle/naive.hpp"

namespace bhg {
namespace {

SumTableSet build(int h, std::initializer_list<Value> elements) {
  SumTableSet t(h);
  for (Value a : elements) t.add_element(a);
  return t;
}

SumTable as_table(std::initializer_list<std::pair<const Value, Count>> init) {
  return SumTable(init);
}

// Random distinct positive integers, small enough to keep enumeration cheap.
std::vector<Value> random_set(std::mt19937_64& rng, std::size_t max_size,
                              Value max_value) {
  std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
  std::uniform_int_distribution<Value> value_dist(1, max_value);
  std::set<Value> picked;
  const auto size = size_dist(rng);
  while (picked.size() < size) picked.insert(value_dist(rng));
  std::vector<Value> out(picked.begin(), picked.end());
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace

TEST_CASE("new table set starts empty") {
  SumTableSet t(2);
  CHECK(t.table(0) == as_table({{0, 1}}));
  CHECK(t.table(2).empty());
  SumTableSet t3(3);
  for (Value x : {0u, 1u, 3u, 100u}) CHECK(t3.rep_count(x) == 0);
  CHECK_THROWS_AS(SumTableSet(1), std::invalid_argument);
  CHECK_THROWS_AS(SumTableSet(0), std::invalid_argument);
}

TEST_CASE("add_element updates the order-h table") {
  CHECK(build(2, {1}).table(2) == as_table({{2, 1}}));
  CHECK(build(2, {1, 2}).table(2) == as_table({{2, 1}, {3, 1}, {4, 1}}));
  CHECK(build(2, {1, 2, 4}).table(2) ==
        as_table({{2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {8, 1}}));
}

TEST_CASE("add_element rejects bad input and leaves the set unchanged") {
  auto t = build(2, {1, 2});
  const auto before = t;
  CHECK_THROWS_AS(t.add_element(2), std::invalid_argument);
  CHECK_THROWS_AS(t.add_element(0), std::invalid_argument);
  CHECK(t == before);

  SumTableSet capped(3, SumTableOptions{20});
  for (Value a : {1, 2, 5}) capped.add_element(a);
  const auto snapshot = capped;
  CHECK_THROWS_AS(capped.add_element(14), GuardExceeded);
  CHECK(capped == snapshot);

  SumTableSet huge(2);
  huge.add_element(1);
  CHECK_THROWS_AS(huge.add_element(std::uint64_t{1} << 63), OverflowError);
}

TEST_CASE("rep_count") {
  const auto t = build(2, {1, 2});
  CHECK(t.rep_count(3) == 1);
  CHECK(t.rep_count(7) == 0);
  CHECK(build(2, {1, 2, 4, 8, 13}).rep_count(14) == 1);
}

TEST_CASE("rep_histogram") {
  CHECK(build(2, {1, 2}).rep_histogram(2).counts() ==
        std::vector<std::uint64_t>{3, 0});
  CHECK(SumTableSet(3).rep_histogram(3).counts() ==
        std::vector<std::uint64_t>{0, 0, 0});
  CHECK(build(2, {1, 2, 3}).rep_histogram(2).counts() ==
        std::vector<std::uint64_t>{5, 1});
  CHECK_THROWS_AS(build(2, {1}).rep_histogram(0), std::invalid_argument);
}

TEST_CASE("candidate_delta") {
  using Added = std::vector<std::pair<Value, Count>>;
  CHECK(build(2, {1, 2}).candidate_delta(3).added ==
        Added{{4, 1}, {5, 1}, {6, 1}});
  CHECK(SumTableSet(2).candidate_delta(5).added == Added{{10, 1}});
  // Oracle: multisets of {1,2,3,4} of size 3 containing 3 that sum to 7 are
  // {3,2,2} and {3,3,1}.
  const auto t = build(3, {1, 2, 4});
  const auto hist_with = oracle::sum_histogram({1, 2, 3, 4}, 3);
  const auto hist_without = oracle::sum_histogram({1, 2, 4}, 3);
  CHECK(hist_with.at(7) - hist_without.at(7) == 2);
  CHECK(t.candidate_delta(3).at(7) == 2);
}

TEST_CASE("brute_force_rep") {
  const std::vector<Value> a{1, 2};
  const std::vector<Value> b{1, 2, 3};
  const std::vector<Value> c{1};
  CHECK(brute_force_rep(a, 2, 4) == 1);
  CHECK(brute_force_rep(b, 2, 4) == 2);
  CHECK(brute_force_rep(c, 5, 5) == 1);
  CHECK(brute_force_rep({}, 2, 0) == 0);
  const std::vector<Value> many{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  CHECK_THROWS_AS(brute_force_rep(many, 4, 10, 100), GuardExceeded);
}

TEST_CASE("multiset_count") {
  CHECK(multiset_count(0, 0) == 1);
  CHECK(multiset_count(0, 3) == 0);
  CHECK(multiset_count(4, 2) == 10);
  CHECK(multiset_count(30, 3) == 4960);
  CHECK(multiset_count(1'000'000, 10) == ~std::uint64_t{0});
}

TEST_CASE("property: tables match enumeration after every insertion") {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 60; ++trial) {
    const int h = 2 + trial % 3;
    const auto set = random_set(rng, 9, 60);
    SumTableSet t(h);
    std::vector<Value> inserted;
    for (Value a : set) {
      t.add_element(a);
      inserted.push_back(a);
      // Totals: sum over table j equals C(|A|+j-1, j).
      for (int j = 0; j <= h; ++j) {
        Count total = 0;
        for (const auto& [x, c] : t.table(j)) {
          CHECK(c >= 1);
          total += c;
        }
        CHECK(total == multiset_count(inserted.size(), j));
      }
      for (Value x : inserted) CHECK(t.table(1).at(x) == 1);
      CHECK(t.table(1).size() == inserted.size());
      // Table h against the oracle histogram.
      const auto hist = oracle::sum_histogram(inserted, h);
      CHECK(t.table(h).size() == hist.size());
      for (const auto& [x, c] : hist) {
        CHECK(t.rep_count(x) == c);
        CHECK(brute_force_rep(inserted, h, x) == c);
      }
    }
  }
}

TEST_CASE("property: candidate delta matches rebuilding from scratch") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int h = 2 + trial % 3;
    const auto set = random_set(rng, 8, 50);
    SumTableSet t(h);
    for (Value a : set) t.add_element(a);
    std::uniform_int_distribution<Value> pick(1, 60);
    Value m = pick(rng);
    while (t.contains(m)) m = pick(rng);

    const auto delta = t.candidate_delta(m);
    CHECK(std::is_sorted(delta.added.begin(), delta.added.end()));
    SumTableSet with = t;
    with.add_element(m);
    for (const auto& [x, c] : with.table(h)) {
      CHECK(t.rep_count(x) + delta.at(x) == c);
    }
    for (const auto& [x, c] : delta.added) {
      CHECK(c >= 1);
      CHECK(x >= static_cast<Value>(h) * std::min(m, set.empty() ? m : *std::min_element(set.begin(), set.end())));
      CHECK(with.rep_count(x) == t.rep_count(x) + c);
    }
  }
}

TEST_CASE("property: insertion order does not matter") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int h = 2 + trial % 3;
    auto set = random_set(rng, 10, 80);
    SumTableSet a(h);
    for (Value v : set) a.add_element(v);
    std::shuffle(set.begin(), set.end(), rng);
    SumTableSet b(h);
    for (Value v : set) b.add_element(v);
    CHECK(a == b);
  }
}

TEST_CASE("property: rep profile is monotone in s and in the set") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int h = 2 + trial % 2;
    const auto set = random_set(rng, 10, 30);
    SumTableSet t(h);
    RepProfile previous = t.rep_histogram(4);
    for (Value v : set) {
      t.add_element(v);
      const auto profile = t.rep_histogram(4);
      for (int s = 1; s < 4; ++s) CHECK(profile.at(s) >= profile.at(s + 1));
      for (int s = 1; s <= 4; ++s) CHECK(profile.at(s) >= previous.at(s));
      CHECK(profile.at(1) <= multiset_count(t.size(), h));
      previous = profile;
    }
  }
}

}  // namespace bhg
