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

// Greedy construction of B_h[g] sequences.
//
// classic_greedy: a_1 = 1, then the smallest integer above the previous term
// that keeps the set B_h[g].
//
// strong_greedy: a_1 = 1, then the smallest positive integer not yet used such
// that the extended set is a strong B_h[g] set:
//   (i)  every x has at most g representations as a sum of h elements, and
//   (ii) R_s = |{x : r(x) >= s}| <= n^{h+(1-s)(h-1)/g} for s = 1..g.
// Every term obeys a_n <= 2g n^{h+(h-1)/g}; a scan that passes this ceiling
// raises ScanExceededBound.

#ifndef BHG_GREEDY_HPP
#define BHG_GREEDY_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "bhg/sumrep.hpp"
#include "bhg/threshold.hpp"

namespace bhg {

struct Params {
  int h = 2;
  int g = 1;
  std::size_t n_terms = 1;

  // Throws std::invalid_argument unless h >= 2, g >= 1, n_terms >= 1.
  void validate() const;

  friend bool operator==(const Params&, const Params&) = default;
};

enum class Algorithm { classic, strong };

std::string_view to_string(Algorithm algorithm) noexcept;

struct StepMeta {
  // Non-member candidates evaluated before (and including) the accepted one.
  std::uint64_t scan_length = 0;
  // floor(2g n^{h+(h-1)/g}) for this term's index n (saturating).
  std::uint64_t bound_value = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SequenceRecord {
  Params params;
  Algorithm algorithm = Algorithm::strong;
  std::vector<Value> terms;  // generation order
  std::vector<StepMeta> per_step;

  bool sorted() const noexcept;
};

// Why a candidate was turned down. `bhg` means A∪{m} is not B_h[g] (witness
// x with the new count); `strong` means R_s(A∪{m}) passed its threshold.
struct Verdict {
  enum class Kind { accept, reject_bhg, reject_strong };

  Kind kind = Kind::accept;
  int s = 0;
  Value x = 0;
  Count count = 0;

  bool accepted() const noexcept { return kind == Kind::accept; }
  static Verdict accept() { return {}; }
};

// Per-step evaluation context for the strong condition: caches R_s(A_n) and
// the integer floors of the n_next thresholds so each candidate costs one
// pass over its delta. Read-only after construction; safe to share between
// scan workers.
class StrongStep {
 public:
  StrongStep(const SumTableSet& tables, std::size_t n_next, int g);

  Verdict evaluate(const CandidateDelta& delta) const;
  // Cheap pre-check: true if some contribution alone already pushes a count
  // past g. Never true for a candidate evaluate() would accept.
  bool obviously_not_bhg(Value m) const;

  const RepProfile& cached_profile() const noexcept { return profile_; }

 private:
  const SumTableSet& tables_;
  int g_;
  RepProfile profile_;
  std::vector<std::uint64_t> limits_;  // floor of threshold for s = 1..g
};

Verdict is_strong_candidate(const SumTableSet& tables,
                            const CandidateDelta& delta, std::size_t n_next,
                            int h, int g);

// Keeps-B_h[g] test used by the classic greedy.
Verdict check_bhg_delta(const SumTableSet& tables, const CandidateDelta& delta,
                        int g);

struct StepEvent {
  const SequenceRecord& record;  // terms so far, including the new one
  const SumTableSet& tables;     // after the new term was added
};

struct GreedyOptions {
  unsigned workers = 1;
  // Classic greedy ceiling override; 0 selects the default.
  std::uint64_t scan_cap = 0;
  // Wall-clock cap for the whole run; zero disables.
  std::chrono::milliseconds time_cap{0};
  SumTableOptions tables;
  std::function<void(const StepEvent&)> observer;
};

SequenceRecord strong_greedy(const Params& params,
                             const GreedyOptions& options = {});
SequenceRecord classic_greedy(const Params& params,
                              const GreedyOptions& options = {});

// Default classic ceiling for term index n: 2n^{2h-1} + 1 when g = 1, else
// 2g n^{2h-1} (an engineering guard; no proven bound).
std::uint64_t classic_default_ceiling(std::uint64_t n, int h, int g);

}  // namespace bhg

#endif  // BHG_GREEDY_HPP
