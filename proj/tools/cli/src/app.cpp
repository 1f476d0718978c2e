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

#include "bhg/cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bhg/cli/fit.hpp"
#include "bhg/cli/sequence_io.hpp"
#include "bhg/errors.hpp"
#include "bhg/greedy.hpp"
#include "bhg/threshold.hpp"
#include "bhg/verify.hpp"

namespace bhg::cli {
namespace {

using nlohmann::ordered_json;

struct RunConfig {
  int h = 0;
  int g = 0;
  std::size_t n_terms = 0;
  std::string algorithm = "strong";
  std::string format;
  std::string out_path;
  std::string input_path;
  bool timing = false;
  bool bhg_only = false;
  bool json_report = false;
  std::size_t sample_budget = 64;

  // Guards; defaults come from BHG_MEMORY_CAP, BHG_SCAN_CAP, BHG_TIME_CAP.
  std::size_t memory_cap = 50'000'000;
  std::uint64_t scan_cap = 0;
  double time_cap_seconds = 0;
  unsigned workers = 1;
};

template <typename T>
void env_default(const char* name, T& target) {
  if (const char* raw = std::getenv(name)) {
    std::istringstream in(raw);
    T value{};
    if (in >> value && in.eof()) target = value;
  }
}

RunConfig defaults_from_env() {
  RunConfig cfg;
  env_default("BHG_MEMORY_CAP", cfg.memory_cap);
  env_default("BHG_SCAN_CAP", cfg.scan_cap);
  env_default("BHG_TIME_CAP", cfg.time_cap_seconds);
  env_default("BHG_WORKERS", cfg.workers);
  return cfg;
}

Params params_of(const RunConfig& cfg) {
  Params p{cfg.h, cfg.g, cfg.n_terms};
  p.validate();
  return p;
}

GreedyOptions greedy_options(const RunConfig& cfg) {
  GreedyOptions o;
  o.workers = cfg.workers;
  o.scan_cap = cfg.scan_cap;
  o.time_cap = std::chrono::milliseconds(
      static_cast<std::int64_t>(cfg.time_cap_seconds * 1000.0));
  o.tables.max_entries = cfg.memory_cap;
  return o;
}

SequenceRecord generate_record(const RunConfig& cfg, Algorithm algorithm) {
  const Params p = params_of(cfg);
  return algorithm == Algorithm::classic ? classic_greedy(p, greedy_options(cfg))
                                         : strong_greedy(p, greedy_options(cfg));
}

Algorithm algorithm_of(const std::string& name) {
  if (name == "classic") return Algorithm::classic;
  if (name == "strong") return Algorithm::strong;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write '" + cfg.out_path + "'");
  file << text;
}

ParsedSequence load_sequence(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  Format f = detect_format(text);
  if (!format.empty()) {
    const auto chosen = parse_format(format);
    if (!chosen) throw std::invalid_argument("unknown format '" + format + "'");
    f = *chosen;
  }
  return parse_sequence(text, f);
}

// --h/--g on the command line win over params stored in the file.
void fill_params(RunConfig& cfg, const ParsedSequence& seq) {
  if (seq.params) {
    if (cfg.h == 0) cfg.h = seq.params->h;
    if (cfg.g == 0) cfg.g = seq.params->g;
  }
  if (cfg.h == 0 || cfg.g == 0) {
    throw std::invalid_argument("--h and --g are required for this input");
  }
  cfg.n_terms = seq.terms.size();
  params_of(cfg);
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string set_name(int h, int g) {
  return "B_" + std::to_string(h) + "[" + std::to_string(g) + "]";
}

// ---------------------------------------------------------------- generate

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Algorithm algorithm = algorithm_of(cfg.algorithm);
  const auto format = parse_format(cfg.format.empty() ? "json" : cfg.format);
  if (!format) throw std::invalid_argument("unknown format '" + cfg.format + "'");

  const SequenceRecord record = generate_record(cfg, algorithm);
  emit(cfg, render(record, *format, cfg.timing), out);

  const auto report = bound_check_for(record);
  if (report && !report->passed()) {
    const auto& row = report->rows[*report->first_failure() - 1];
    err << "bound check failed at n=" << row.n << ": a_n=" << row.term
        << " > " << row.rhs << "\n";
    return kVerificationFailure;
  }
  return kOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(RunConfig cfg, std::ostream& out) {
  const ParsedSequence seq = load_sequence(cfg.input_path, cfg.format);
  fill_params(cfg, seq);
  const bool bhg_only =
      cfg.bhg_only || seq.algorithm == std::optional(Algorithm::classic);
  const int h = cfg.h;
  const int g = cfg.g;

  ordered_json report;
  report["h"] = h;
  report["g"] = g;
  report["terms"] = seq.terms.size();
  report["mode"] = bhg_only ? "bhg" : "strong";
  std::ostringstream text;
  text << "verify: " << seq.terms.size() << " terms, h=" << h << " g=" << g
       << ", mode=" << (bhg_only ? "B_h[g] only" : "strong prefixes") << "\n";

  bool passed = true;
  ordered_json failure;
  if (bhg_only) {
    if (const auto v = verify_bhg(seq.terms, h, g)) {
      passed = false;
      failure = {{"condition", "bhg"}, {"x", v->x}, {"count", v->count}};
      text << "not " << set_name(h, g) << ": x=" << v->x << " has " << v->count
           << " representations\n";
    } else {
      text << "set is " << set_name(h, g) << "\n";
    }
  } else {
    for (const auto& p : verify_strong_prefixes(seq.terms, h, g)) {
      if (p.strong()) continue;
      passed = false;
      if (p.violation) {
        failure = {{"prefix", p.n},
                   {"condition", "bhg"},
                   {"x", p.violation->x},
                   {"count", p.violation->count}};
        text << "prefix " << p.n << ": not " << set_name(h, g)
             << ": x=" << p.violation->x << " has " << p.violation->count
             << " representations\n";
      } else {
        const int s = p.failed_s;
        const auto r_s = p.rep_profile[static_cast<std::size_t>(s - 1)];
        const auto t = Threshold::strong_condition(p.n, h, g, s);
        failure = {{"prefix", p.n},
                   {"condition", "strong"},
                   {"s", s},
                   {"R_s", r_s},
                   {"threshold", t.to_string()}};
        text << "prefix " << p.n << ": R_" << s << "=" << r_s << " > "
             << t.to_string() << "\n";
      }
      break;
    }
    if (passed) {
      text << "every prefix 1.." << seq.terms.size() << " is a strong "
           << set_name(h, g) << " set\n";
    }
  }
  report["sets_ok"] = passed;
  report["first_failure"] = passed ? ordered_json() : failure;

  SequenceRecord record;
  record.params = Params{h, g, seq.terms.size()};
  record.algorithm = bhg_only ? Algorithm::classic : Algorithm::strong;
  record.terms = seq.terms;
  std::optional<BoundReport> bounds;
  if (!bhg_only) bounds = strong_bound_check(record);
  else if (g == 1) bounds = classic_bound_check(record);
  if (bounds) {
    const auto first = bounds->first_failure();
    const std::string which = bhg_only ? "2*n^(2h-1)" : "2g*n^(h+(h-1)/g)";
    report["bound_check"] = {
        {"bound", which},
        {"passed", bounds->passed()},
        {"first_failure", first ? ordered_json(*first) : ordered_json()}};
    if (first) {
      const auto& row = bounds->rows[*first - 1];
      text << "bound a_n <= " << which << " fails at n=" << row.n
           << ": a_n=" << row.term << " > " << row.rhs << "\n";
    } else {
      text << "bound a_n <= " << which << ": pass (max a_n/bound "
           << fixed(bounds->max_ratio()) << ")\n";
    }
    passed = passed && bounds->passed();
  } else {
    report["bound_check"] = nullptr;
  }
  report["passed"] = passed;
  text << (passed ? "PASS" : "FAIL") << "\n";

  emit(cfg, cfg.json_report ? report.dump(2) + "\n" : text.str(), out);
  return passed ? kOk : kVerificationFailure;
}

// ---------------------------------------------------------------- diagnose

ordered_json forbidden_json(const ForbiddenSetReport& r) {
  return {{"n", r.n},
          {"window", r.window},
          {"members", r.size_members},
          {"F0", r.size_f0},
          {"Fs", r.size_fs},
          {"union", r.union_size},
          {"eq1_rhs", r.bound_rhs},
          {"eq1_holds", r.union_within_bound},
          {"first_admissible", r.first_admissible}};
}

std::string diagnostics_text(const ProofDiagnostics& d, int h, int g,
                             std::size_t n_terms, std::size_t budget) {
  std::ostringstream s;
  s << "diagnose: h=" << h << " g=" << g << " terms=" << n_terms
    << " sample_budget=" << budget << "\n\n";
  s << std::setw(4) << "n" << std::setw(10) << "window" << std::setw(8)
    << "|F_n|" << std::setw(8) << "|F_0|";
  for (int k = 1; k <= g; ++k) {
    s << std::setw(8) << ("|F_" + std::to_string(k) + "|");
  }
  s << std::setw(8) << "union" << "  eq1 rhs\n";
  for (const auto& r : d.steps) {
    s << std::setw(4) << r.n << std::setw(10) << r.window << std::setw(8)
      << r.size_members << std::setw(8) << r.size_f0;
    for (auto f : r.size_fs) s << std::setw(8) << f;
    s << std::setw(8) << r.union_size << "  " << r.bound_rhs << "\n";
  }
  s << "\n";

  // Per-candidate checks are summarized per (n, s); failures listed.
  std::map<std::pair<std::size_t, int>, std::pair<std::size_t, std::size_t>> r_summary;
  for (const auto& c : d.checks) {
    if (c.name == "R") {
      auto& [total, held] = r_summary[{c.n, c.s}];
      ++total;
      held += c.holds ? 1 : 0;
      if (!c.holds) {
        s << "n=" << c.n << " s=" << c.s << " R m=" << *c.m << ": " << c.lhs
          << " <= " << c.rhs << " FAIL\n";
      }
      continue;
    }
    s << "n=" << c.n << " s=" << c.s << " " << c.name << ": " << c.lhs
      << (c.name == "TT" ? " > " : c.name == "F1_empty" ? " == " : " <= ")
      << c.rhs << (c.holds ? " ok" : " FAIL") << "\n";
  }
  for (const auto& [key, counts] : r_summary) {
    s << "n=" << key.first << " s=" << key.second << " R: " << counts.second
      << "/" << counts.first << " sampled candidates hold\n";
  }
  const auto failures = d.failures();
  s << "\n" << d.checks.size() << " checks, " << failures.size() << " failed\n";
  s << (failures.empty() ? "PASS" : "FAIL") << "\n";
  return s.str();
}

int cmd_diagnose(RunConfig cfg, std::ostream& out) {
  std::vector<Value> terms;
  if (!cfg.input_path.empty()) {
    const auto seq = load_sequence(cfg.input_path, "");
    fill_params(cfg, seq);
    terms = seq.terms;
  } else {
    terms = generate_record(cfg, Algorithm::strong).terms;
  }
  const auto diag =
      proof_diagnostics(terms, cfg.h, cfg.g, cfg.sample_budget);

  std::string text;
  if (cfg.format == "json") {
    ordered_json j;
    j["params"] = {{"h", cfg.h}, {"g", cfg.g}, {"n_terms", terms.size()}};
    j["terms"] = terms;
    j["sample_budget"] = cfg.sample_budget;
    ordered_json steps = ordered_json::array();
    for (const auto& r : diag.steps) steps.push_back(forbidden_json(r));
    j["steps"] = std::move(steps);
    ordered_json checks = ordered_json::array();
    for (const auto& c : diag.checks) {
      ordered_json row{{"n", c.n}, {"s", c.s}, {"name", c.name}};
      row["m"] = c.m ? ordered_json(*c.m) : ordered_json();
      row["lhs"] = c.lhs;
      row["rhs"] = c.rhs;
      row["holds"] = c.holds;
      checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    j["all_hold"] = diag.all_hold();
    text = j.dump(2) + "\n";
  } else if (cfg.format.empty() || cfg.format == "text") {
    text = diagnostics_text(diag, cfg.h, cfg.g, terms.size(), cfg.sample_budget);
  } else {
    throw std::invalid_argument("diagnose supports --format text|json");
  }
  emit(cfg, text, out);
  return diag.all_hold() ? kOk : kVerificationFailure;
}

// ----------------------------------------------------------------- compare

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto classic = generate_record(cfg, Algorithm::classic);
  const auto strong = generate_record(cfg, Algorithm::strong);
  std::optional<std::size_t> divergence;
  for (std::size_t i = 0; i < classic.terms.size(); ++i) {
    if (classic.terms[i] != strong.terms[i]) {
      divergence = i + 1;
      break;
    }
  }

  std::string text;
  if (cfg.format == "json") {
    ordered_json j;
    j["params"] = {{"h", cfg.h}, {"g", cfg.g}, {"n_terms", cfg.n_terms}};
    j["classic"] = classic.terms;
    j["strong"] = strong.terms;
    j["identical"] = !divergence;
    j["first_divergence"] = divergence ? ordered_json(*divergence) : ordered_json();
    j["strong_sorted"] = strong.sorted();
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "compare: h=" << cfg.h << " g=" << cfg.g << " n=" << cfg.n_terms
      << "\n";
    s << std::setw(5) << "n" << std::setw(14) << "classic" << std::setw(14)
      << "strong" << "\n";
    for (std::size_t i = 0; i < classic.terms.size(); ++i) {
      s << std::setw(5) << i + 1 << std::setw(14) << classic.terms[i]
        << std::setw(14) << strong.terms[i]
        << (classic.terms[i] != strong.terms[i] ? "  *" : "") << "\n";
    }
    if (divergence) {
      s << "first divergence at n=" << *divergence << "\n";
    } else {
      s << "identical\n";
    }
    s << "strong output " << (strong.sorted() ? "is" : "is not")
      << " increasing\n";
    text = s.str();
  }
  emit(cfg, text, out);

  if (cfg.g == 1 && divergence) {
    err << "classic and strong greedy differ for g = 1 at n=" << *divergence
        << "\n";
    return kVerificationFailure;
  }
  return kOk;
}

// --------------------------------------------------------------------- fit

int cmd_fit(RunConfig cfg, std::ostream& out) {
  std::vector<Value> terms;
  if (!cfg.input_path.empty()) {
    const auto seq = load_sequence(cfg.input_path, cfg.format);
    if (seq.params) {
      if (cfg.h == 0) cfg.h = seq.params->h;
      if (cfg.g == 0) cfg.g = seq.params->g;
    }
    terms = seq.terms;
  } else {
    terms = generate_record(cfg, algorithm_of(cfg.algorithm)).terms;
  }
  const GrowthFit fit = fit_growth_exponent(terms);

  std::ostringstream s;
  s << "fit: " << terms.size() << " terms, least squares of log a_n on log n"
    << " over n=" << fit.first_n << ".." << terms.size() << "\n";
  s << "fitted exponent: " << fixed(fit.slope) << "\n";
  if (cfg.h >= 2 && cfg.g >= 1) {
    const double theorem = cfg.h + static_cast<double>(cfg.h - 1) / cfg.g;
    s << "reference h+(h-1)/g: " << fixed(theorem) << "\n";
    s << "reference h (counting lower bound): " << cfg.h << "\n";
    if (cfg.g == 1) s << "reference 2h-1 (classic bound): " << 2 * cfg.h - 1 << "\n";
  }
  emit(cfg, s.str(), out);
  return kOk;
}

void add_params(CLI::App* sub, RunConfig& cfg, bool required) {
  auto* h = sub->add_option("--h", cfg.h, "order h (>= 2)");
  auto* g = sub->add_option("--g", cfg.g, "multiplicity bound g (>= 1)");
  if (required) {
    h->required();
    g->required();
  }
}

void add_guards(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--memory-cap", cfg.memory_cap,
                  "max stored sum-table entries (env BHG_MEMORY_CAP)");
  sub->add_option("--scan-cap", cfg.scan_cap,
                  "classic greedy scan ceiling, 0 = default (env BHG_SCAN_CAP)");
  sub->add_option("--time-cap", cfg.time_cap_seconds,
                  "wall-clock cap in seconds, 0 = none (env BHG_TIME_CAP)");
  sub->add_option("--workers", cfg.workers,
                  "candidate scan threads (env BHG_WORKERS)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg = defaults_from_env();

  CLI::App app{"Generate and verify B_h[g] sequences"};
  app.name("bhg");
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1, 1);

  auto* generate = app.add_subcommand("generate", "run a greedy generator");
  add_params(generate, cfg, true);
  generate->add_option("--n", cfg.n_terms, "number of terms")->required();
  generate->add_option("--algo", cfg.algorithm, "strong | classic")
      ->check(CLI::IsMember({"strong", "classic"}));
  generate->add_option("--format", cfg.format, "json | csv | bfile")
      ->check(CLI::IsMember({"json", "csv", "bfile"}));
  generate->add_option("--out,-o", cfg.out_path, "output file (default stdout)");
  generate->add_flag("--timing", cfg.timing, "add a metadata block with timings");
  add_guards(generate, cfg);

  auto* verify = app.add_subcommand("verify", "check a term list");
  verify->add_option("input", cfg.input_path, "bfile, CSV or JSON file")->required();
  add_params(verify, cfg, false);
  verify->add_option("--format", cfg.format, "input format (default: detect)")
      ->check(CLI::IsMember({"json", "csv", "bfile"}));
  verify->add_flag("--bhg-only", cfg.bhg_only,
                   "check only the B_h[g] property (no strong condition)");
  verify->add_flag("--json", cfg.json_report, "emit a JSON report");
  verify->add_option("--out,-o", cfg.out_path, "report file (default stdout)");

  auto* diagnose = app.add_subcommand("diagnose", "forbidden-set ledger");
  add_params(diagnose, cfg, false);
  diagnose->add_option("--n", cfg.n_terms, "number of strong-greedy terms");
  diagnose->add_option("--input", cfg.input_path, "diagnose terms from a file");
  diagnose->add_option("--sample-budget", cfg.sample_budget,
                       "candidates per (n, s) for per-candidate checks");
  diagnose->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  diagnose->add_option("--out,-o", cfg.out_path, "report file (default stdout)");
  add_guards(diagnose, cfg);

  auto* compare = app.add_subcommand("compare", "classic vs strong side by side");
  add_params(compare, cfg, true);
  compare->add_option("--n", cfg.n_terms, "number of terms")->required();
  compare->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  compare->add_option("--out,-o", cfg.out_path, "report file (default stdout)");
  add_guards(compare, cfg);

  auto* fit = app.add_subcommand("fit", "growth exponent of a sequence");
  fit->add_option("input", cfg.input_path, "term file (omit to generate)");
  add_params(fit, cfg, false);
  fit->add_option("--n", cfg.n_terms, "terms to generate when no input");
  fit->add_option("--algo", cfg.algorithm, "strong | classic")
      ->check(CLI::IsMember({"strong", "classic"}));
  fit->add_option("--format", cfg.format, "input format (default: detect)")
      ->check(CLI::IsMember({"json", "csv", "bfile"}));
  fit->add_option("--out,-o", cfg.out_path, "report file (default stdout)");
  add_guards(fit, cfg);

  std::vector<std::string> storage{"bhg"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out);
    if (*diagnose) {
      if (cfg.input_path.empty() && cfg.n_terms == 0) {
        throw std::invalid_argument("diagnose needs --n or --input");
      }
      return cmd_diagnose(cfg, out);
    }
    if (*compare) return cmd_compare(cfg, out, err);
    if (*fit) return cmd_fit(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ScanExceededBound& e) {
    err << "internal bound contradiction: " << e.what() << "\n";
    return kInternalBound;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsage;
}

}  // namespace bhg::cli
