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

#include "bhg/cli/sequence_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>

#include "bhg/errors.hpp"

namespace bhg::cli {
namespace {

using nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(std::string_view token, std::size_t line,
                        const char* what) {
  std::uint64_t v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(token) + "'");
  }
  return v;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    const auto nl = text.find('\n');
    f(line, text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

class TermCollector {
 public:
  void add(std::size_t line, std::uint64_t index, std::uint64_t value) {
    if (index != terms_.size() + 1) {
      throw ParseError(line, "expected index " +
                                 std::to_string(terms_.size() + 1) + ", got " +
                                 std::to_string(index));
    }
    if (value == 0) throw ParseError(line, "terms must be positive");
    if (!seen_.insert(value).second) {
      throw ParseError(line, "repeated term " + std::to_string(value));
    }
    terms_.push_back(value);
  }

  std::vector<Value> finish(std::size_t last_line) {
    if (terms_.empty()) throw ParseError(last_line, "no terms found");
    return std::move(terms_);
  }

 private:
  std::vector<Value> terms_;
  std::set<Value> seen_;
};

ParsedSequence parse_columns(std::string_view text, char separator) {
  TermCollector terms;
  std::size_t last = 1;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    last = line;
    const auto s = trim(raw);
    if (s.empty() || s.front() == '#') return;
    if (separator == ',' && s == "n,a_n") return;
    std::size_t cut = separator == ',' ? s.find(',') : s.find_first_of(" \t");
    if (cut == std::string_view::npos) {
      throw ParseError(line, "expected two columns");
    }
    const auto index = trim(s.substr(0, cut));
    const auto value = trim(s.substr(cut + 1));
    terms.add(line, parse_u64(index, line, "index"),
              parse_u64(value, line, "term"));
  });
  return ParsedSequence{terms.finish(last), std::nullopt, std::nullopt};
}

ParsedSequence parse_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; map it to a line.
    const auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
    const auto line =
        1 + static_cast<std::size_t>(std::count(upto.begin(), upto.end(), '\n'));
    throw ParseError(line, "malformed JSON");
  }
  ParsedSequence out;
  const ordered_json* array = &doc;
  if (doc.is_object()) {
    if (!doc.contains("terms")) throw ParseError(1, "missing \"terms\"");
    array = &doc["terms"];
    if (doc.contains("params")) {
      const auto& p = doc["params"];
      out.params = Params{p.value("h", 0), p.value("g", 0),
                          p.value("n_terms", std::size_t{0})};
    }
    if (doc.contains("algorithm")) {
      const auto name = doc["algorithm"].get<std::string>();
      if (name == "classic") out.algorithm = Algorithm::classic;
      else if (name == "strong") out.algorithm = Algorithm::strong;
      else throw ParseError(1, "unknown algorithm '" + name + "'");
    }
  }
  if (!array->is_array()) throw ParseError(1, "\"terms\" must be an array");
  TermCollector terms;
  std::uint64_t index = 0;
  for (const auto& v : *array) {
    if (!v.is_number_unsigned()) {
      throw ParseError(1, "term " + std::to_string(index + 1) +
                              " is not a positive integer");
    }
    terms.add(1, ++index, v.get<std::uint64_t>());
  }
  out.terms = terms.finish(1);
  return out;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "bfile") return Format::bfile;
  return std::nullopt;
}

std::string_view to_string(Format format) noexcept {
  switch (format) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::bfile: return "bfile";
  }
  return "bfile";
}

Format detect_format(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos &&
      (text[first] == '{' || text[first] == '[')) {
    return Format::json;
  }
  Format found = Format::bfile;
  bool decided = false;
  for_each_line(text, [&](std::size_t, std::string_view raw) {
    if (decided) return;
    const auto s = trim(raw);
    if (s.empty() || s.front() == '#') return;
    found = s.find(',') != std::string_view::npos ? Format::csv : Format::bfile;
    decided = true;
  });
  return found;
}

ParsedSequence parse_sequence(std::string_view text, Format format) {
  switch (format) {
    case Format::json: return parse_json(text);
    case Format::csv: return parse_columns(text, ',');
    case Format::bfile: return parse_columns(text, ' ');
  }
  return parse_columns(text, ' ');
}

std::string render_bfile(const std::vector<Value>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += std::to_string(i + 1) + ' ' + std::to_string(terms[i]) + '\n';
  }
  return out;
}

std::string render_csv(const std::vector<Value>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += std::to_string(i + 1) + ',' + std::to_string(terms[i]) + '\n';
  }
  return out;
}

std::optional<BoundReport> bound_check_for(const SequenceRecord& record) {
  if (record.algorithm == Algorithm::strong) return strong_bound_check(record);
  if (record.params.g == 1) return classic_bound_check(record);
  return std::nullopt;
}

nlohmann::ordered_json record_to_json(const SequenceRecord& record,
                                      bool include_timing) {
  ordered_json j;
  j["schema"] = "bhg.sequence/1";
  j["params"] = {{"h", record.params.h},
                 {"g", record.params.g},
                 {"n_terms", record.params.n_terms}};
  j["algorithm"] = std::string(to_string(record.algorithm));
  j["terms"] = record.terms;
  j["sorted"] = record.sorted();

  const auto report = bound_check_for(record);
  ordered_json steps = ordered_json::array();
  for (std::size_t i = 0; i < record.terms.size(); ++i) {
    ordered_json step;
    step["n"] = i + 1;
    step["a_n"] = record.terms[i];
    step["theorem_bound_floor"] = record.per_step[i].bound_value;
    step["scan_length"] = record.per_step[i].scan_length;
    if (report) step["bound_ok"] = report->rows[i].passed;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);

  if (report) {
    const auto failure = report->first_failure();
    j["bound_check"] = {
        {"bound", record.algorithm == Algorithm::strong ? "2g*n^(h+(h-1)/g)"
                                                        : "2*n^(2h-1)"},
        {"passed", report->passed()},
        {"first_failure", failure ? ordered_json(*failure) : ordered_json()}};
  } else {
    j["bound_check"] = nullptr;
  }

  if (include_timing) {
    ordered_json elapsed = ordered_json::array();
    for (const auto& step : record.per_step) elapsed.push_back(step.elapsed.count());
    j["metadata"] = {{"elapsed_ns", std::move(elapsed)}};
  }
  return j;
}

std::string render(const SequenceRecord& record, Format format,
                   bool include_timing) {
  switch (format) {
    case Format::json: return record_to_json(record, include_timing).dump(2) + "\n";
    case Format::csv: return render_csv(record.terms);
    case Format::bfile: return render_bfile(record.terms);
  }
  return render_bfile(record.terms);
}

}  // namespace bhg::cli
