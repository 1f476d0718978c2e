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

#include "bhg/verify.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "bhg/errors.hpp"
#include "bhg/threshold.hpp"

namespace bhg {
namespace {

using Histogram = std::unordered_map<Value, Count>;

std::vector<Value> sorted_distinct(std::span<const Value> elements) {
  std::vector<Value> out(elements.begin(), elements.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("elements must be distinct");
  }
  if (!out.empty() && out.front() == 0) {
    throw std::invalid_argument("elements must be positive");
  }
  return out;
}

void guard_multisets(std::size_t n, int j, const VerifyLimits& limits) {
  if (multiset_count(n, static_cast<std::uint64_t>(j)) > limits.max_multisets) {
    throw GuardExceeded("enumeration of " + std::to_string(j) +
                        "-multisets of " + std::to_string(n) +
                        " elements exceeds the limit of " +
                        std::to_string(limits.max_multisets));
  }
}

// Calls f(sum) once per size-j multiset of `sorted`.
template <typename F>
void for_each_multiset_sum(const std::vector<Value>& sorted, int j, F&& f) {
  if (j == 0) {
    f(Value{0});
    return;
  }
  if (sorted.empty()) return;
  const auto last = sorted.size() - 1;
  std::vector<std::size_t> idx(static_cast<std::size_t>(j), 0);
  for (;;) {
    Value sum = 0;
    for (auto i : idx) sum = checked_add(sum, sorted[i]);
    f(sum);
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == last) --pos;
    if (pos == 0) return;
    const std::size_t next = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < idx.size(); ++i) idx[i] = next;
  }
}

Histogram histogram(const std::vector<Value>& sorted, int h,
                    const VerifyLimits& limits) {
  guard_multisets(sorted.size(), h, limits);
  Histogram out;
  for_each_multiset_sum(sorted, h, [&](Value x) { ++out[x]; });
  return out;
}

std::vector<std::uint64_t> profile_of(const Histogram& hist, int g) {
  std::vector<std::uint64_t> r(static_cast<std::size_t>(g), 0);
  for (const auto& [x, c] : hist) {
    for (Count s = 1; s <= std::min<Count>(c, static_cast<Count>(g)); ++s) {
      ++r[s - 1];
    }
  }
  return r;
}

std::uint64_t at(const std::vector<std::uint64_t>& v, int s) {
  return v[static_cast<std::size_t>(s - 1)];
}

// Evaluates candidates m against a fixed A by enumerating the multisets of
// A ∪ {m} that use m, grouped by sum.
class WindowScanner {
 public:
  struct Outcome {
    bool breaks_bhg = false;
    std::vector<std::uint64_t> r_after;  // R_s(A ∪ {m}), s = 1..g
    std::vector<std::uint64_t> t;        // T_{s,n}(m), s = 1..g (t[0] = 0)
  };

  WindowScanner(std::vector<Value> sorted, int h, int g,
                const VerifyLimits& limits)
      : sorted_(std::move(sorted)), h_(h), g_(g) {
    hist_ = histogram(sorted_, h_, limits);
    profile_ = profile_of(hist_, g_);
    already_broken_ = std::any_of(hist_.begin(), hist_.end(), [&](const auto& e) {
      return e.second > static_cast<Count>(g_);
    });
    partial_.resize(static_cast<std::size_t>(h_));
    for (int j = 0; j < h_; ++j) {
      guard_multisets(sorted_.size(), j, limits);
      auto& sums = partial_[static_cast<std::size_t>(j)];
      for_each_multiset_sum(sorted_, j, [&](Value y) { sums.push_back(y); });
    }
  }

  std::uint64_t contributions() const noexcept {
    std::uint64_t total = 0;
    for (const auto& p : partial_) total += p.size();
    return total;
  }

  const Histogram& hist() const noexcept { return hist_; }
  const std::vector<std::uint64_t>& profile() const noexcept {
    return profile_;
  }
  bool member(Value m) const {
    return std::binary_search(sorted_.begin(), sorted_.end(), m);
  }

  void evaluate(Value m, Outcome& out) {
    const auto g = static_cast<std::size_t>(g_);
    out.breaks_bhg = already_broken_;
    out.r_after.assign(profile_.begin(), profile_.end());
    out.t.assign(g, 0);

    touched_.clear();
    for (int k = 1; k <= h_; ++k) {
      const Value shift = checked_mul(static_cast<Value>(k), m);
      for (Value y : partial_[static_cast<std::size_t>(h_ - k)]) {
        touched_.push_back(checked_add(y, shift));
      }
    }
    std::sort(touched_.begin(), touched_.end());
    for (std::size_t i = 0; i < touched_.size();) {
      std::size_t j = i;
      while (j < touched_.size() && touched_[j] == touched_[i]) ++j;
      const Value x = touched_[i];
      const Count extra = j - i;
      i = j;

      const auto it = hist_.find(x);
      const Count before = it == hist_.end() ? 0 : it->second;
      const Count after = before + extra;
      if (after > g) out.breaks_bhg = true;
      for (Count s = before + 1; s <= std::min<Count>(after, g); ++s) {
        ++out.r_after[s - 1];
      }
      for (std::size_t s = 2; s <= g; ++s) {
        if (before >= s - 1) ++out.t[s - 1];
      }
    }
  }

 private:
  std::vector<Value> sorted_;
  int h_;
  int g_;
  Histogram hist_;
  bool already_broken_ = false;
  std::vector<std::uint64_t> profile_;
  std::vector<std::vector<Value>> partial_;  // partial_[j]: j-multiset sums
  std::vector<Value> touched_;
};

void guard_window(std::uint64_t window, std::uint64_t per_candidate,
                  const VerifyLimits& limits) {
  const BigInt work = BigInt(window) * per_candidate;
  if (work > limits.max_window_work) {
    throw GuardExceeded("window scan of " + std::to_string(window) +
                        " candidates exceeds the work limit of " +
                        std::to_string(limits.max_window_work));
  }
}

struct WindowTotals {
  ForbiddenSetReport report;
  std::vector<std::uint64_t> t_sum;     // sum over window of T_s(m)
  std::vector<std::uint64_t> t_sum_fs;  // sum over m in F_s of T_s(m)
};

// Full window classification; `on_candidate` sees every non-member.
template <typename OnCandidate>
WindowTotals scan_window(const std::vector<Value>& sorted, int h, int g,
                         const VerifyLimits& limits,
                         OnCandidate&& on_candidate) {
  const std::size_t n = sorted.size();
  const auto gs = static_cast<std::size_t>(g);
  WindowScanner scanner(sorted, h, g, limits);
  const TheoremBound next_bound = theorem_bound(n + 1, h, g);
  const std::uint64_t window = next_bound.floor_u64();
  guard_window(window, scanner.contributions(), limits);

  std::vector<std::uint64_t> next_limits;
  for (int s = 1; s <= g; ++s) {
    next_limits.push_back(
        Threshold::strong_condition(n + 1, h, g, s).floor_u64());
  }

  WindowTotals totals;
  auto& rep = totals.report;
  rep.n = n;
  rep.window = window;
  rep.size_fs.assign(gs, 0);
  totals.t_sum.assign(gs, 0);
  totals.t_sum_fs.assign(gs, 0);

  WindowScanner::Outcome outcome;
  for (Value m = 1; m <= window; ++m) {
    scanner.evaluate(m, outcome);
    for (std::size_t i = 1; i < gs; ++i) totals.t_sum[i] += outcome.t[i];
    if (scanner.member(m)) {
      ++rep.size_members;
      ++rep.union_size;
      continue;
    }
    bool forbidden = outcome.breaks_bhg;
    if (outcome.breaks_bhg) ++rep.size_f0;
    for (std::size_t i = 0; i < gs; ++i) {
      if (outcome.r_after[i] > next_limits[i]) {
        ++rep.size_fs[i];
        totals.t_sum_fs[i] += outcome.t[i];
        forbidden = true;
      }
    }
    if (forbidden) {
      ++rep.union_size;
    } else if (rep.first_admissible == 0) {
      rep.first_admissible = m;
    }
    on_candidate(m, scanner, outcome);
  }

  rep.bound_rhs = next_bound.threshold().to_string() + "-1";
  rep.bound_rhs_floor = next_bound.floor() - 1;
  rep.union_within_bound = next_bound.admits(BigInt(rep.union_size) + 1);
  return totals;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::optional<BhgViolation> verify_bhg(std::span<const Value> elements, int h,
                                       int g, const VerifyLimits& limits) {
  if (h < 2 || g < 1) throw std::invalid_argument("need h >= 2 and g >= 1");
  const auto hist = histogram(sorted_distinct(elements), h, limits);
  std::optional<BhgViolation> worst;
  for (const auto& [x, c] : hist) {
    if (c > static_cast<Count>(g) && (!worst || x < worst->x)) {
      worst = BhgViolation{x, c};
    }
  }
  return worst;
}

std::vector<PrefixReport> verify_strong_prefixes(std::span<const Value> terms,
                                                 int h, int g,
                                                 const VerifyLimits& limits) {
  if (h < 2 || g < 1) throw std::invalid_argument("need h >= 2 and g >= 1");
  sorted_distinct(terms);
  std::vector<PrefixReport> out;
  out.reserve(terms.size());
  for (std::size_t n = 1; n <= terms.size(); ++n) {
    PrefixReport rep;
    rep.n = n;
    const auto prefix = terms.first(n);
    rep.violation = verify_bhg(prefix, h, g, limits);
    const auto hist = histogram(sorted_distinct(prefix), h, limits);
    rep.rep_profile = profile_of(hist, g);
    for (int s = 1; s <= g; ++s) {
      if (!threshold_leq(at(rep.rep_profile, s), n, h, g, s)) {
        rep.failed_s = s;
        break;
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

bool BoundReport::passed() const noexcept { return !first_failure(); }

std::optional<std::size_t> BoundReport::first_failure() const noexcept {
  for (const auto& row : rows) {
    if (!row.passed) return row.n;
  }
  return std::nullopt;
}

double BoundReport::max_ratio() const noexcept {
  double best = 0.0;
  for (const auto& row : rows) best = std::max(best, row.ratio);
  return best;
}

namespace {

BoundReport check_against(const SequenceRecord& record,
                          const auto& threshold_for) {
  BoundReport report;
  for (std::size_t i = 0; i < record.terms.size(); ++i) {
    const std::size_t n = i + 1;
    const Threshold t = threshold_for(n);
    BoundRow row;
    row.n = n;
    row.term = record.terms[i];
    row.rhs = t.to_string();
    row.rhs_floor = t.floor();
    row.passed = t.admits(BigInt(row.term));
    const double denom = t.floor().convert_to<double>();
    row.ratio = denom > 0 ? static_cast<double>(row.term) / denom
                          : std::numeric_limits<double>::infinity();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

BoundReport strong_bound_check(const SequenceRecord& record) {
  const auto& p = record.params;
  return check_against(record, [&](std::size_t n) {
    return theorem_bound(n, p.h, p.g).threshold();
  });
}

BoundReport classic_bound_check(const SequenceRecord& record) {
  const auto& p = record.params;
  if (p.g != 1) {
    throw std::invalid_argument(
        "the classic growth bound is only established for g = 1");
  }
  return check_against(record, [&](std::size_t n) {
    return Threshold(2, n, static_cast<std::uint64_t>(2 * p.h - 1), 1);
  });
}

ForbiddenSetReport forbidden_set_sizes(std::span<const Value> elements, int h,
                                       int g, const VerifyLimits& limits) {
  if (h < 2 || g < 1) throw std::invalid_argument("need h >= 2 and g >= 1");
  return scan_window(sorted_distinct(elements), h, g, limits,
                     [](Value, const WindowScanner&,
                        const WindowScanner::Outcome&) {})
      .report;
}

std::uint64_t t_count(std::span<const Value> elements, Value m, int s, int h,
                      const VerifyLimits& limits) {
  if (s < 2) throw std::invalid_argument("t_count needs s >= 2");
  if (h < 2) throw std::invalid_argument("need h >= 2");
  const auto sorted = sorted_distinct(elements);
  if (sorted.empty()) return 0;
  const auto hist = histogram(sorted, h, limits);
  std::set<Value> reachable;
  for (int k = 1; k <= h; ++k) {
    guard_multisets(sorted.size(), h - k, limits);
    const Value shift = checked_mul(static_cast<Value>(k), m);
    for_each_multiset_sum(sorted, h - k,
                          [&](Value y) { reachable.insert(y + shift); });
  }
  std::uint64_t count = 0;
  for (Value x : reachable) {
    const auto it = hist.find(x);
    const Count r = it == hist.end() ? 0 : it->second;
    if (r >= static_cast<Count>(s - 1)) ++count;
  }
  return count;
}

bool ProofDiagnostics::all_hold() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InequalityCheck& c) { return c.holds; });
}

std::vector<InequalityCheck> ProofDiagnostics::failures() const {
  std::vector<InequalityCheck> out;
  for (const auto& c : checks) {
    if (!c.holds) out.push_back(c);
  }
  return out;
}

ProofDiagnostics proof_diagnostics(const SequenceRecord& record,
                                   std::size_t sample_budget,
                                   const VerifyLimits& limits) {
  return proof_diagnostics(record.terms, record.params.h, record.params.g,
                           sample_budget, limits);
}

ProofDiagnostics proof_diagnostics(std::span<const Value> terms, int h, int g,
                                   std::size_t sample_budget,
                                   const VerifyLimits& limits) {
  if (h < 2 || g < 1) throw std::invalid_argument("need h >= 2 and g >= 1");
  sorted_distinct(terms);
  ProofDiagnostics diag;
  const auto gs = static_cast<std::size_t>(g);
  const auto forbidden_exponent = static_cast<std::uint64_t>(h * g + h - 1);

  for (std::size_t n = 2; n <= terms.size(); ++n) {
    const auto sorted = sorted_distinct(terms.first(n));

    // Per-(n, s) deterministic stride over the non-member window.
    const std::uint64_t window = theorem_bound(n + 1, h, g).floor_u64();
    const std::uint64_t candidates = window - std::min<std::uint64_t>(window, n);
    const std::uint64_t stride =
        sample_budget == 0
            ? 0
            : std::max<std::uint64_t>(1, candidates / sample_budget);
    std::uint64_t seen = 0;
    std::vector<std::size_t> taken(gs, 0);

    auto on_candidate = [&](Value m, const WindowScanner& scanner,
                            const WindowScanner::Outcome& out) {
      const std::uint64_t index = seen++;
      if (stride == 0 || index % stride != 0) return;
      for (std::size_t i = 1; i < gs; ++i) {
        if (taken[i] >= sample_budget) continue;
        ++taken[i];
        const int s = static_cast<int>(i) + 1;
        TSample sample{n, s, m, out.t[i], scanner.profile()[i],
                       out.r_after[i]};
        diag.samples.push_back(sample);
        diag.checks.push_back(InequalityCheck{
            n, s, "R", m, str(sample.r_s_after),
            str(sample.r_s_before) + "+" + str(sample.t),
            sample.r_s_after <= sample.r_s_before + sample.t});
      }
    };
    WindowTotals totals = scan_window(sorted, h, g, limits, on_candidate);
    const ForbiddenSetReport& rep = totals.report;

    // R_s(A_n) against the condition-ii thresholds.
    const auto hist = histogram(sorted, h, limits);
    const auto profile = profile_of(hist, g);
    for (int s = 1; s <= g; ++s) {
      const Threshold t = Threshold::strong_condition(n, h, g, s);
      diag.checks.push_back(InequalityCheck{
          n, s, "definition_ii", std::nullopt, str(at(profile, s)),
          t.to_string(), t.admits(BigInt(at(profile, s)))});
    }

    diag.checks.push_back(InequalityCheck{n, 0, "eq1_union", std::nullopt,
                                          str(rep.union_size), rep.bound_rhs,
                                          rep.union_within_bound});
    diag.checks.push_back(InequalityCheck{n, 1, "F1_empty", std::nullopt,
                                          str(rep.size_f(1)), "0",
                                          rep.size_f(1) == 0});

    const Threshold forbidden_cap(2, n, forbidden_exponent,
                                  static_cast<unsigned>(g));
    diag.checks.push_back(InequalityCheck{
        n, 0, "F0_chain", std::nullopt, str(rep.size_f0),
        forbidden_cap.to_string(), forbidden_cap.admits(BigInt(rep.size_f0))});

    // 1 + n + ... + n^{h-1}
    BigInt geometric = 0;
    for (int k = 0; k < h; ++k) {
      geometric += big_pow(BigInt(n), static_cast<unsigned>(k));
    }
    for (int s = 2; s <= g; ++s) {
      const auto i = static_cast<std::size_t>(s - 1);
      const std::uint64_t fs = rep.size_fs[i];
      diag.checks.push_back(InequalityCheck{
          n, s, "Fs", std::nullopt, str(fs), forbidden_cap.to_string(),
          forbidden_cap.admits(BigInt(fs))});

      const BigInt ttt_rhs = geometric * at(profile, s - 1);
      diag.checks.push_back(InequalityCheck{
          n, s, "TTT", std::nullopt, str(totals.t_sum[i]),
          geometric.str() + "*" + str(at(profile, s - 1)),
          BigInt(totals.t_sum[i]) <= ttt_rhs});

      // sum_{m in F_s} T > n^{(h-1)(g+1-s)/g} |F_s|; vacuous for empty F_s.
      const auto tt_exp = static_cast<unsigned>((h - 1) * (g + 1 - s));
      const bool tt_holds =
          fs == 0 || big_pow(BigInt(totals.t_sum_fs[i]), static_cast<unsigned>(g)) >
                         big_pow(BigInt(n), tt_exp) *
                             big_pow(BigInt(fs), static_cast<unsigned>(g));
      diag.checks.push_back(InequalityCheck{
          n, s, "TT", std::nullopt, str(totals.t_sum_fs[i]),
          Threshold(1, n, tt_exp, static_cast<unsigned>(g)).to_string() + "*" +
              str(fs),
          tt_holds});
    }
    diag.steps.push_back(rep);
  }
  return diag;
}

}  // namespace bhg
