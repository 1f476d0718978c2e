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

// From-scratch validation of B_h[g] and strong B_h[g] sets, the growth
// bounds, and the forbidden-candidate counting behind the growth bound.
//
// Nothing here touches SumTableSet or the greedy's cached state: every count
// is rebuilt by enumerating multisets.

#ifndef BHG_VERIFY_HPP
#define BHG_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bhg/exact.hpp"
#include "bhg/greedy.hpp"
#include "bhg/sumrep.hpp"

namespace bhg {

struct VerifyLimits {
  // Largest number of size-h multisets a single enumeration may visit.
  std::uint64_t max_multisets = 50'000'000;
  // Largest (window size) x (per-candidate contributions) for window scans.
  std::uint64_t max_window_work = 2'000'000'000;
};

struct BhgViolation {
  Value x = 0;
  Count count = 0;

  friend bool operator==(const BhgViolation&, const BhgViolation&) = default;
};

// nullopt when A is B_h[g]; otherwise the smallest x with r(x) > g.
std::optional<BhgViolation> verify_bhg(std::span<const Value> elements, int h,
                                       int g, const VerifyLimits& limits = {});

struct PrefixReport {
  std::size_t n = 0;
  std::optional<BhgViolation> violation;  // condition i
  std::vector<std::uint64_t> rep_profile;  // R_s(A_n), s = 1..g
  int failed_s = 0;                        // first s failing condition ii

  bool strong() const noexcept { return !violation && failed_s == 0; }
};

// One report per prefix length n = 1..|terms|. Throws std::invalid_argument
// on repeated or non-positive terms.
std::vector<PrefixReport> verify_strong_prefixes(
    std::span<const Value> terms, int h, int g,
    const VerifyLimits& limits = {});

struct BoundRow {
  std::size_t n = 0;
  Value term = 0;
  std::string rhs;       // exact right-hand side, e.g. "2*10^3"
  BigInt rhs_floor;
  bool passed = false;
  double ratio = 0.0;    // term / rhs (approximate, for display)
};

struct BoundReport {
  std::vector<BoundRow> rows;

  bool passed() const noexcept;
  std::optional<std::size_t> first_failure() const noexcept;  // 1-based n
  double max_ratio() const noexcept;
};

// a_n <= 2g n^{h+(h-1)/g}, decided as a_n^g <= (2g)^g n^{hg+h-1}.
BoundReport strong_bound_check(const SequenceRecord& record);

// a_n <= 2 n^{2h-1}. Only proven for g = 1; throws std::invalid_argument for
// g > 1.
BoundReport classic_bound_check(const SequenceRecord& record);

struct ForbiddenSetReport {
  std::size_t n = 0;
  std::uint64_t window = 0;          // candidates 1..window were classified
  std::uint64_t size_members = 0;    // |F_n| (members inside the window)
  std::uint64_t size_f0 = 0;         // |F_{0,n}|
  std::vector<std::uint64_t> size_fs;  // |F_{s,n}|, s = 1..g
  std::uint64_t union_size = 0;
  std::string bound_rhs;             // "2g(n+1)^{...} - 1" spelled out
  BigInt bound_rhs_floor;
  bool union_within_bound = false;   // union_size <= bound_rhs, exactly
  std::uint64_t first_admissible = 0;  // 0 if none in the window

  std::uint64_t size_f(int s) const noexcept {
    return s >= 1 && static_cast<std::size_t>(s) <= size_fs.size()
               ? size_fs[static_cast<std::size_t>(s - 1)]
               : 0;
  }
};

// Classifies every m in [1, floor(2g(n+1)^{h+(h-1)/g})] as member, F_0,
// F_s, or admissible by direct evaluation, n = |A|.
ForbiddenSetReport forbidden_set_sizes(std::span<const Value> elements, int h,
                                       int g, const VerifyLimits& limits = {});

// T_{s,n}(m): distinct x with r_A(x) >= s-1 and x in k*m + (h-k)-fold sums of
// A for some 1 <= k <= h (k = h meaning x = h*m). Requires s >= 2.
std::uint64_t t_count(std::span<const Value> elements, Value m, int s, int h,
                      const VerifyLimits& limits = {});

struct InequalityCheck {
  std::size_t n = 0;
  int s = 0;                 // 0 when the check has no s
  std::string name;          // definition_ii, eq1_union, F1_empty, F0_count,
                             // F0_chain, Fs, TT, TTT, R
  std::optional<Value> m;    // candidate for per-m checks
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct TSample {
  std::size_t n = 0;
  int s = 0;
  Value m = 0;
  std::uint64_t t = 0;              // T_{s,n}(m)
  std::uint64_t r_s_before = 0;     // R_s(A_n)
  std::uint64_t r_s_after = 0;      // R_s(A_n ∪ {m})
};

struct ProofDiagnostics {
  std::vector<ForbiddenSetReport> steps;
  std::vector<TSample> samples;
  std::vector<InequalityCheck> checks;

  bool all_hold() const noexcept;
  std::vector<InequalityCheck> failures() const;
};

// Rechecks every counting step of the growth-bound argument on each prefix
// A_n (n >= 2) of the record by exhaustive window scans. sample_budget bounds
// the number of candidates per (n, s) on which the per-candidate inequality
// R_s(A_n ∪ m) <= R_s(A_n) + T_{s,n}(m) is recorded.
ProofDiagnostics proof_diagnostics(const SequenceRecord& record,
                                   std::size_t sample_budget,
                                   const VerifyLimits& limits = {});

// Same, over explicit terms (used to diagnose arbitrary or corrupted input).
ProofDiagnostics proof_diagnostics(std::span<const Value> terms, int h, int g,
                                   std::size_t sample_budget,
                                   const VerifyLimits& limits = {});

}  // namespace bhg

#endif  // BHG_VERIFY_HPP
