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
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "bhg/errors.hpp"
#include "bhg/greedy.hpp"
#include "bhg/verify.hpp"
#include "oracle/naive.hpp"

namespace bhg {
namespace {

using Terms = std::vector<Value>;

std::size_t count_named(const ProofDiagnostics& d, const std::string& name) {
  return static_cast<std::size_t>(
      std::count_if(d.checks.begin(), d.checks.end(),
                    [&](const InequalityCheck& c) { return c.name == name; }));
}

}  // namespace

TEST_CASE("verify_bhg") {
  CHECK_FALSE(verify_bhg(Terms{1, 2, 4, 8, 13}, 2, 1));
  CHECK(verify_bhg(Terms{1, 2, 3}, 2, 1) == BhgViolation{4, 2});
  CHECK_FALSE(verify_bhg(Terms{1, 2, 3}, 2, 2));
  CHECK_THROWS_AS(verify_bhg(Terms{1, 1}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_bhg(Terms{1, 2, 3, 4, 5, 6, 7, 8}, 3, 1,
                             VerifyLimits{10, 1000}),
                  GuardExceeded);
}

TEST_CASE("verify_strong_prefixes") {
  const auto ok = verify_strong_prefixes(Terms{1, 2}, 2, 1);
  REQUIRE(ok.size() == 2);
  CHECK(ok[0].strong());
  CHECK(ok[1].strong());

  const auto bad = verify_strong_prefixes(Terms{1, 2, 3}, 2, 1);
  CHECK(bad[0].strong());
  CHECK(bad[1].strong());
  CHECK_FALSE(bad[2].strong());
  CHECK(bad[2].violation == BhgViolation{4, 2});

  const auto rec = strong_greedy({2, 2, 15});
  for (const auto& p : verify_strong_prefixes(rec.terms, 2, 2)) {
    CHECK(p.strong());
  }

  // B_3[3] throughout, but the 20th prefix fails condition ii at s = 3.
  const auto classic = classic_greedy({3, 3, 20}).terms;
  const auto report = verify_strong_prefixes(classic, 3, 3);
  for (std::size_t i = 0; i + 1 < report.size(); ++i) CHECK(report[i].strong());
  CHECK_FALSE(report.back().violation);
  CHECK(report.back().failed_s == 3);
  CHECK(report.back().rep_profile == std::vector<std::uint64_t>{967, 423, 150});
}

TEST_CASE("strong_bound_check") {
  const auto rec = strong_greedy({2, 1, 10});
  const auto report = strong_bound_check(rec);
  CHECK(report.passed());
  CHECK(report.rows.back().term == 81);
  CHECK(report.rows.back().rhs_floor == 2000);
  CHECK(report.rows.back().rhs == "2*10^3");
  for (int g = 1; g <= 3; ++g) {
    const auto r = strong_bound_check(strong_greedy({3, g, 1}));
    CHECK(r.rows.front().passed);
    CHECK(r.rows.front().rhs_floor == 2 * g);
  }

  SequenceRecord corrupt = rec;
  corrupt.terms[4] = 100000;
  const auto failed = strong_bound_check(corrupt);
  CHECK_FALSE(failed.passed());
  CHECK(failed.first_failure() == 5);
  CHECK(failed.rows[4].term == 100000);
  CHECK(failed.rows[4].rhs == "2*5^3");
  CHECK(failed.max_ratio() > 1.0);
}

TEST_CASE("classic_bound_check") {
  const auto rec = classic_greedy({2, 1, 10});
  const auto report = classic_bound_check(rec);
  CHECK(report.passed());
  CHECK(report.rows[9].rhs_floor == 2000);
  CHECK(report.rows[1].rhs_floor == 16);
  const auto h3 = classic_greedy({3, 1, 5});
  CHECK(h3.terms[4] == oracle::classic_greedy(3, 1, 5)[4]);
  const auto h3_report = classic_bound_check(h3);
  CHECK(h3_report.passed());
  CHECK(h3_report.rows[4].rhs_floor == 6250);
  CHECK_THROWS_AS(classic_bound_check(classic_greedy({2, 2, 5})),
                  std::invalid_argument);
}

TEST_CASE("forbidden_set_sizes") {
  {
    const auto r = forbidden_set_sizes(Terms{1}, 2, 1);
    CHECK(r.n == 1);
    CHECK(r.window == 16);  // 2 * 2^3
    CHECK(r.size_f0 == 0);
    CHECK(r.size_members == 1);
    CHECK(r.union_size == 1);
    CHECK(r.first_admissible == 2);
  }
  {
    const auto r = forbidden_set_sizes(Terms{1, 2}, 2, 1);
    CHECK(r.size_f0 >= 1);
    CHECK(r.first_admissible == 4);
    CHECK(r.union_within_bound);
  }
  {
    // Strong prefix for (h, g) = (2, 2), n = 6; values from an exhaustive
    // scan by an independent script.
    const auto rec = strong_greedy({2, 2, 7});
    const Terms prefix(rec.terms.begin(), rec.terms.begin() + 6);
    CHECK(prefix == Terms{1, 2, 3, 4, 6, 8});
    const auto r = forbidden_set_sizes(prefix, 2, 2);
    CHECK(r.window == 518);
    CHECK(r.size_members == 6);
    CHECK(r.size_f0 == 5);
    CHECK(r.size_f(1) == 0);
    CHECK(r.size_f(2) == 0);
    CHECK(r.union_size == 11);
    CHECK(r.first_admissible == rec.terms[6]);
    CHECK(r.union_within_bound);
    CHECK(r.bound_rhs == "4*7^(5/2)-1");
  }
}

TEST_CASE("forbidden set classification matches the naive checker") {
  const auto rec = strong_greedy({3, 2, 6});
  const Terms prefix(rec.terms.begin(), rec.terms.begin() + 5);
  const auto r = forbidden_set_sizes(prefix, 3, 2);
  std::uint64_t f0 = 0;
  std::uint64_t any = 0;
  for (Value m = 1; m <= r.window; ++m) {
    std::vector<oracle::u64> trial(prefix.begin(), prefix.end());
    if (std::find(trial.begin(), trial.end(), m) != trial.end()) {
      ++any;
      continue;
    }
    trial.push_back(m);
    const bool bhg = oracle::is_bhg(trial, 3, 2);
    if (!bhg) ++f0;
    if (!oracle::is_strong(trial, 3, 2)) ++any;
  }
  CHECK(r.size_f0 == f0);
  CHECK(r.union_size == any);
}

TEST_CASE("t_count") {
  CHECK(t_count(Terms{1, 2}, 4, 2, 2) == 0);
  CHECK(t_count(Terms{}, 7, 2, 2) == 0);
  CHECK(t_count(Terms{}, 7, 3, 3) == 0);
  // m = 3: x in {4, 5, 6}, of which only 4 has r_A(x) >= 1.
  CHECK(t_count(Terms{1, 2}, 3, 2, 2) == 1);
  CHECK_THROWS_AS(t_count(Terms{1, 2}, 3, 1, 2), std::invalid_argument);
}

TEST_CASE("proof_diagnostics with g = 1 has no s-ledger") {
  const auto d = proof_diagnostics(strong_greedy({2, 1, 8}), 16);
  CHECK(d.all_hold());
  CHECK(d.samples.empty());
  CHECK(count_named(d, "Fs") == 0);
  CHECK(count_named(d, "R") == 0);
  CHECK(count_named(d, "eq1_union") == 7);
  CHECK(count_named(d, "F1_empty") == 7);
  CHECK(count_named(d, "F0_chain") == 7);
}

TEST_CASE("proof_diagnostics h = 2, g = 2, n = 8") {
  const auto rec = strong_greedy({2, 2, 8});
  const auto d = proof_diagnostics(rec, 32);
  CHECK(d.all_hold());
  CHECK(d.steps.size() == 7);
  CHECK(count_named(d, "Fs") == 7);
  CHECK(count_named(d, "TTT") == 7);
  CHECK(count_named(d, "TT") == 7);
  CHECK(count_named(d, "R") == 7 * 32);
  for (const auto& step : d.steps) CHECK(step.first_admissible != 0);
  // Sampled T values agree with the standalone route.
  for (const auto& sample : d.samples) {
    const Terms prefix(rec.terms.begin(), rec.terms.begin() + sample.n);
    CHECK(t_count(prefix, sample.m, sample.s, 2) == sample.t);
  }
}

TEST_CASE("per-candidate inequality is recorded as evaluated for h = 3") {
  // A = {1,2,3}, h = 3: 100+1+3 and 100+2+2 give x = 104 two new
  // representations while r_A(104) = 0, so R_2 grows by one with T = 0.
  const auto d = proof_diagnostics(Terms{1, 2, 3}, 3, 2, 100000);
  bool seen = false;
  for (const auto& sample : d.samples) {
    if (sample.n == 3 && sample.m == 100) {
      seen = true;
      CHECK(sample.t == 0);
      CHECK(sample.r_s_before == 3);
      CHECK(sample.r_s_after == 4);
    }
  }
  CHECK(seen);
  CHECK(t_count(Terms{1, 2, 3}, 100, 2, 3) == 0);
  const auto failures = d.failures();
  REQUIRE_FALSE(failures.empty());
  for (const auto& f : failures) CHECK(f.name == "R");
}

TEST_CASE("proof_diagnostics names failures on corrupt input") {
  // Not B_2[2]: every candidate is forbidden, so the counting bounds break.
  const Terms corrupt{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const auto d = proof_diagnostics(corrupt, 2, 2, 4);
  CHECK_FALSE(d.all_hold());
  bool union_failed = false;
  for (const auto& f : d.failures()) {
    if (f.name == "eq1_union" && f.n == 10) union_failed = true;
    CHECK(f.n >= 2);
    CHECK_FALSE(f.lhs.empty());
    CHECK_FALSE(f.rhs.empty());
  }
  CHECK(union_failed);
}

TEST_CASE("window guard") {
  CHECK_THROWS_AS(forbidden_set_sizes(Terms{1, 2, 4, 8, 13}, 2, 1,
                                      VerifyLimits{1000000, 100}),
                  GuardExceeded);
}

}  // namespace bhg
