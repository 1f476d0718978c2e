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

#include "bhg/greedy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bhg/errors.hpp"
#include "bhg/exact.hpp"
#include "bhg/parallel_scan.hpp"

namespace bhg {
namespace {

using Clock = std::chrono::steady_clock;

// True if some single contribution k*m + y already exceeds g.
bool contribution_exceeds(const SumTableSet& tables, Value m, int g) {
  const int h = tables.order();
  const auto limit = static_cast<Count>(g);
  for (int k = 1; k <= h; ++k) {
    const Value shift = static_cast<Value>(k) * m;
    for (const auto& [y, c] : tables.table(h - k)) {
      if (tables.rep_count(y + shift) + c > limit) return true;
    }
  }
  return false;
}

// Non-members below m, i.e. candidates the scan tested before accepting m.
std::uint64_t scan_length_for(const SumTableSet& tables, Value m) {
  const auto members = tables.elements();
  const auto below = static_cast<std::uint64_t>(
      std::lower_bound(members.begin(), members.end(), m) - members.begin());
  return m - below;
}

class RunClock {
 public:
  explicit RunClock(std::chrono::milliseconds cap)
      : cap_(cap), start_(Clock::now()), step_(start_) {}

  std::chrono::nanoseconds lap() {
    const auto now = Clock::now();
    const auto d = now - step_;
    step_ = now;
    if (cap_.count() > 0 && now - start_ > cap_) {
      throw GuardExceeded("time cap of " + std::to_string(cap_.count()) +
                          " ms exceeded");
    }
    return std::chrono::duration_cast<std::chrono::nanoseconds>(d);
  }

 private:
  std::chrono::milliseconds cap_;
  Clock::time_point start_;
  Clock::time_point step_;
};

void commit(SequenceRecord& record, SumTableSet& tables, Value m,
            StepMeta meta, const GreedyOptions& options) {
  tables.add_element(m);
  record.terms.push_back(m);
  record.per_step.push_back(meta);
  if (options.observer) options.observer(StepEvent{record, tables});
}

}  // namespace

void Params::validate() const {
  if (h < 2) throw std::invalid_argument("h must be >= 2");
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  if (n_terms < 1) throw std::invalid_argument("n_terms must be >= 1");
}

std::string_view to_string(Algorithm algorithm) noexcept {
  return algorithm == Algorithm::classic ? "classic" : "strong";
}

bool SequenceRecord::sorted() const noexcept {
  return std::adjacent_find(terms.begin(), terms.end(),
                            [](Value a, Value b) { return a >= b; }) ==
         terms.end();
}

StrongStep::StrongStep(const SumTableSet& tables, std::size_t n_next, int g)
    : tables_(tables), g_(g), profile_(tables.rep_histogram(g)) {
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  limits_.reserve(static_cast<std::size_t>(g));
  for (int s = 1; s <= g; ++s) {
    limits_.push_back(
        Threshold::strong_condition(n_next, tables.order(), g, s).floor_u64());
  }
}

bool StrongStep::obviously_not_bhg(Value m) const {
  return contribution_exceeds(tables_, m, g_);
}

Verdict StrongStep::evaluate(const CandidateDelta& delta) const {
  const auto g = static_cast<Count>(g_);
  std::vector<std::uint64_t> crossed(static_cast<std::size_t>(g_), 0);
  for (const auto& [x, extra] : delta.added) {
    const Count before = tables_.rep_count(x);
    const Count after = before + extra;
    if (after > g) {
      return Verdict{Verdict::Kind::reject_bhg, 0, x, after};
    }
    // x now counts towards R_s for before < s <= after.
    for (Count s = before + 1; s <= after; ++s) ++crossed[s - 1];
  }
  for (int s = 1; s <= g_; ++s) {
    const auto i = static_cast<std::size_t>(s - 1);
    const auto r_s = profile_.at(s) + crossed[i];
    if (r_s > limits_[i]) {
      return Verdict{Verdict::Kind::reject_strong, s, 0, r_s};
    }
  }
  return Verdict::accept();
}

Verdict is_strong_candidate(const SumTableSet& tables,
                            const CandidateDelta& delta, std::size_t n_next,
                            int h, int g) {
  if (h != tables.order()) throw std::invalid_argument("order mismatch");
  if (n_next != tables.size() + 1) {
    throw std::invalid_argument("n_next must be |A| + 1");
  }
  return StrongStep(tables, n_next, g).evaluate(delta);
}

Verdict check_bhg_delta(const SumTableSet& tables, const CandidateDelta& delta,
                        int g) {
  for (const auto& [x, extra] : delta.added) {
    const Count after = tables.rep_count(x) + extra;
    if (after > static_cast<Count>(g)) {
      return Verdict{Verdict::Kind::reject_bhg, 0, x, after};
    }
  }
  return Verdict::accept();
}

std::uint64_t classic_default_ceiling(std::uint64_t n, int h, int g) {
  const BigInt power = big_pow(BigInt(n), static_cast<unsigned>(2 * h - 1));
  if (g == 1) return saturate_u64(2 * power + 1);
  return saturate_u64(2 * static_cast<std::uint64_t>(g) * power);
}

SequenceRecord strong_greedy(const Params& params,
                             const GreedyOptions& options) {
  params.validate();
  const int h = params.h;
  const int g = params.g;
  const unsigned workers = std::max(1u, options.workers);

  SequenceRecord record{params, Algorithm::strong, {}, {}};
  record.terms.reserve(params.n_terms);
  SumTableSet tables(h, options.tables);
  RunClock clock(options.time_cap);
  std::vector<CandidateDelta> scratch(workers);

  // Candidates whose addition already breaks B_h[g]. Representation counts
  // only grow as the set grows, so these stay inadmissible for good. Frozen
  // during a scan; workers queue new entries in their own lists.
  std::vector<std::uint8_t> dead;
  std::vector<std::vector<Value>> newly_dead(workers);

  commit(record, tables, 1,
         StepMeta{1, theorem_bound(1, h, g).floor_u64(), clock.lap()},
         options);

  while (record.terms.size() < params.n_terms) {
    const std::size_t n_next = record.terms.size() + 1;
    const TheoremBound bound = theorem_bound(n_next, h, g);
    const StrongStep step(tables, n_next, g);

    auto accept = [&](unsigned id, Value m) {
      if (m < dead.size() && dead[m] != 0) return false;
      if (tables.contains(m)) return false;
      if (step.obviously_not_bhg(m)) {
        newly_dead[id].push_back(m);
        return false;
      }
      tables.candidate_delta_into(m, scratch[id]);
      const Verdict v = step.evaluate(scratch[id]);
      if (v.kind == Verdict::Kind::reject_bhg) newly_dead[id].push_back(m);
      return v.accepted();
    };
    const auto found =
        find_first_accepting(1, bound.floor_u64(), workers, accept);
    if (!found) {
      throw ScanExceededBound(
          "no admissible candidate for a_" + std::to_string(n_next) +
          " at or below " + bound.floor().str() + " (h=" + std::to_string(h) +
          ", g=" + std::to_string(g) + ")");
    }
    const Value m = *found;
    for (auto& list : newly_dead) {
      for (Value d : list) {
        if (d >= dead.size()) dead.resize(std::max<std::size_t>(d + 1, 2 * dead.size()), 0);
        dead[d] = 1;
      }
      list.clear();
    }
    const StepMeta meta{scan_length_for(tables, m), bound.floor_u64(),
                        clock.lap()};
    commit(record, tables, m, meta, options);
  }
  return record;
}

SequenceRecord classic_greedy(const Params& params,
                              const GreedyOptions& options) {
  params.validate();
  const int h = params.h;
  const int g = params.g;
  const unsigned workers = std::max(1u, options.workers);

  SequenceRecord record{params, Algorithm::classic, {}, {}};
  record.terms.reserve(params.n_terms);
  SumTableSet tables(h, options.tables);
  RunClock clock(options.time_cap);
  std::vector<CandidateDelta> scratch(workers);

  commit(record, tables, 1,
         StepMeta{1, theorem_bound(1, h, g).floor_u64(), clock.lap()},
         options);

  while (record.terms.size() < params.n_terms) {
    const std::size_t n_next = record.terms.size() + 1;
    const std::uint64_t ceiling = options.scan_cap != 0
                                      ? options.scan_cap
                                      : classic_default_ceiling(n_next, h, g);
    const Value first = record.terms.back() + 1;

    auto accept = [&](unsigned id, Value m) {
      if (contribution_exceeds(tables, m, g)) return false;
      tables.candidate_delta_into(m, scratch[id]);
      return check_bhg_delta(tables, scratch[id], g).accepted();
    };
    const auto found = find_first_accepting(first, ceiling, workers, accept);
    if (!found) {
      throw GuardExceeded("classic scan for a_" + std::to_string(n_next) +
                          " exceeded the configured limit " +
                          std::to_string(ceiling));
    }
    const Value m = *found;
    const StepMeta meta{m - record.terms.back(),
                        theorem_bound(n_next, h, g).floor_u64(), clock.lap()};
    commit(record, tables, m, meta, options);
  }
  return record;
}

}  // namespace bhg
