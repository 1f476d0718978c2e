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

// Acceptance suite. One line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bhg/cli/app.hpp"
#include "bhg/cli/fit.hpp"
#include "bhg/cli/sequence_io.hpp"
#include "bhg/exact.hpp"
#include "bhg/greedy.hpp"
#include "bhg/sumrep.hpp"
#include "bhg/verify.hpp"

namespace {

using namespace bhg;

// Tolerances. Everything except the fit band is exact.
constexpr double kFitUpper = 3.0;          // strictly below 2h-1 for h = 2
constexpr double kFitLower = 2.0 - 0.15;   // trivial floor minus fit noise
constexpr int kAbsentSamples = 20;
constexpr std::size_t kGridTerms = 30;
constexpr std::size_t kSampleBudget = 64;

const std::vector<std::pair<int, int>> kGrid = {{2, 1}, {2, 2}, {2, 3},
                                                {3, 1}, {3, 2}, {3, 3}};

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string grid_label(int h, int g) {
  return "(h=" + std::to_string(h) + ",g=" + std::to_string(g) + ")";
}

Outcome theorem_bound_grid() {
  Outcome o;
  for (auto [h, g] : kGrid) {
    const auto rec = strong_greedy({h, g, kGridTerms});
    for (std::size_t i = 0; i < rec.terms.size(); ++i) {
      // a_n^g <= (2g)^g n^{hg+h-1}
      const BigInt lhs = big_pow(BigInt(rec.terms[i]), g);
      const BigInt rhs = big_pow(BigInt(2 * g), g) *
                         big_pow(BigInt(i + 1), h * g + h - 1);
      if (lhs > rhs) {
        o.fail(grid_label(h, g) + " n=" + std::to_string(i + 1));
      }
    }
    if (rec.terms.size() != kGridTerms) o.fail(grid_label(h, g) + " short");
  }
  if (o.pass) o.detail = "6 grid points x 30 terms";
  return o;
}

Outcome g1_collapse() {
  Outcome o;
  const std::vector<Value> head{1, 2, 4, 8, 13, 21, 31, 45, 66, 81};
  const auto strong = strong_greedy({2, 1, 50});
  const auto classic = classic_greedy({2, 1, 50});
  if (strong.terms != classic.terms) o.fail("strong != classic");
  if (!std::equal(head.begin(), head.end(), strong.terms.begin())) {
    o.fail("prefix differs from 1,2,4,8,...");
  }
  if (o.pass) o.detail = "50 terms equal, a_50=" + std::to_string(strong.terms.back());
  return o;
}

Outcome classic_bound() {
  Outcome o;
  for (int h : {2, 3, 4}) {
    const auto rec = classic_greedy({h, 1, kGridTerms});
    for (std::size_t i = 0; i < rec.terms.size(); ++i) {
      const BigInt rhs = 2 * big_pow(BigInt(i + 1), 2 * h - 1);
      if (BigInt(rec.terms[i]) > rhs) {
        o.fail("h=" + std::to_string(h) + " n=" + std::to_string(i + 1));
      }
    }
  }
  if (o.pass) o.detail = "h in {2,3,4}, 30 terms";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2026);
  std::uint64_t sums_checked = 0;
  for (auto [h, g] : kGrid) {
    GreedyOptions opts;
    opts.observer = [&, h = h](const StepEvent& ev) {
      const auto elems = ev.tables.elements();
      const auto& full = ev.tables.table(h);
      Value top = 0;
      for (const auto& [x, c] : full) {
        ++sums_checked;
        top = std::max(top, x);
        if (brute_force_rep(elems, h, x) != c) {
          o.fail(grid_label(h, g) + " x=" + std::to_string(x));
        }
      }
      std::uniform_int_distribution<Value> pick(0, top + 1);
      for (int k = 0; k < kAbsentSamples;) {
        const Value x = pick(rng);
        if (full.count(x) != 0) continue;
        ++k;
        if (ev.tables.rep_count(x) != 0 || brute_force_rep(elems, h, x) != 0) {
          o.fail(grid_label(h, g) + " absent x=" + std::to_string(x));
        }
      }
    };
    const auto rec = strong_greedy({h, g, kGridTerms}, opts);
    for (const auto& p : verify_strong_prefixes(rec.terms, h, g)) {
      if (!p.strong()) {
        o.fail(grid_label(h, g) + " prefix " + std::to_string(p.n));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(sums_checked) + " sums agree";
  return o;
}

Outcome proof_checks() {
  Outcome o;
  const std::set<std::string> wanted{"eq1_union", "F1_empty", "Fs", "R"};
  std::size_t counted = 0;
  for (auto [h, g, n] : {std::tuple{2, 2, std::size_t{10}},
                         std::tuple{3, 2, std::size_t{8}}}) {
    const auto rec = strong_greedy({h, g, n});
    const auto diag = proof_diagnostics(rec, kSampleBudget);
    std::size_t failed = 0;
    std::string first;
    for (const auto& c : diag.checks) {
      if (wanted.count(c.name) == 0) continue;
      ++counted;
      if (!c.holds) {
        if (failed++ == 0) {
          first = c.name + " n=" + std::to_string(c.n) +
                  " s=" + std::to_string(c.s) +
                  (c.m ? " m=" + std::to_string(*c.m) : std::string()) + ": " +
                  c.lhs + " > " + c.rhs;
        }
      }
    }
    if (failed != 0) {
      o.fail(grid_label(h, g) + " " + std::to_string(failed) +
             " failing, first " + first);
    }
  }
  if (o.pass) o.detail = std::to_string(counted) + " instances hold";
  return o;
}

Outcome fit_band() {
  Outcome o;
  const auto rec = strong_greedy({2, 1, 50});
  const auto fit = cli::fit_growth_exponent(rec.terms);
  char buf[64];
  std::snprintf(buf, sizeof buf, "slope %.4f", fit.slope);
  o.detail = buf;
  if (!(fit.slope < kFitUpper && fit.slope >= kFitLower)) o.fail(buf);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() /
                   ("bhg-acceptance-" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  for (auto [h, g] : kGrid) {
    const auto hs = std::to_string(h), gs = std::to_string(g);
    const auto n = std::to_string(kGridTerms);
    for (const std::string fmt : {"json", "csv", "bfile"}) {
      const auto a = (dir / ("a." + fmt)).string();
      const auto b = (dir / ("b." + fmt)).string();
      const std::vector<std::string> base{"generate", "--h", hs, "--g", gs,
                                          "--n", n, "--format", fmt};
      auto with = [&](const std::string& path, const std::string& workers) {
        auto args = base;
        args.insert(args.end(), {"--out", path, "--workers", workers});
        return args;
      };
      if (cli(with(a, "1")) != 0 || cli(with(b, "2")) != 0) {
        o.fail(grid_label(h, g) + " generate " + fmt);
        continue;
      }
      const auto bytes = slurp(a);
      if (bytes != slurp(b)) o.fail(grid_label(h, g) + " repeat " + fmt);
      if (cli({"verify", a, "--h", hs, "--g", gs}) != 0) {
        o.fail(grid_label(h, g) + " verify " + fmt);
      }
      const auto parsed = cli::parse_sequence(bytes, cli::detect_format(bytes));
      std::string again;
      if (fmt == "csv") again = cli::render_csv(parsed.terms);
      if (fmt == "bfile") again = cli::render_bfile(parsed.terms);
      if (fmt == "json") {
        SequenceRecord rec = strong_greedy({h, g, parsed.terms.size()});
        if (rec.terms != parsed.terms || !parsed.params ||
            !(*parsed.params == rec.params)) {
          o.fail(grid_label(h, g) + " json terms");
        }
        again = cli::render(rec, cli::Format::json, false);
      }
      if (again != bytes) o.fail(grid_label(h, g) + " round-trip " + fmt);
    }
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = "6 grid points x 3 formats";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 theorem bound (exact)", theorem_bound_grid},
      {"2 g=1 collapse", g1_collapse},
      {"3 classic bound", classic_bound},
      {"4 oracle equivalence", oracle_equivalence},
      {"5 proof diagnostics", proof_checks},
      {"6 growth fit band", fit_band},
      {"7 determinism and round-trip", determinism},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    std::printf("%s  criterion %s  [%s]  (%.1fs)\n", o.pass ? "PASS" : "FAIL",
                name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
