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

// Sequence file formats.
//
//   bfile  "n a_n\n" per term, 1-based n in generation order. Lines starting
//          with '#' and blank lines are skipped on input.
//   csv    "n,a_n\n" per term; an optional "n,a_n" header is accepted on input.
//   json   full record: params, algorithm, terms, per-step bounds, sortedness
//          and the bound-check verdict. See docs/sequence-record.schema.json.

#ifndef BHG_CLI_SEQUENCE_IO_HPP
#define BHG_CLI_SEQUENCE_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bhg/greedy.hpp"
#include "bhg/verify.hpp"

namespace bhg::cli {

enum class Format { json, csv, bfile };

std::optional<Format> parse_format(std::string_view name);
std::string_view to_string(Format format) noexcept;

// '{' or '[' first -> json; a comma on the first data line -> csv; else bfile.
Format detect_format(std::string_view text);

struct ParsedSequence {
  std::vector<Value> terms;
  std::optional<Params> params;
  std::optional<Algorithm> algorithm;
};

// Throws ParseError with a 1-based line number.
ParsedSequence parse_sequence(std::string_view text, Format format);

std::string render_bfile(const std::vector<Value>& terms);
std::string render_csv(const std::vector<Value>& terms);

// The bound verdict stored in the JSON record: Theorem-1 bound for strong
// runs, the classic bound for classic g = 1 runs, none otherwise.
std::optional<BoundReport> bound_check_for(const SequenceRecord& record);

nlohmann::ordered_json record_to_json(const SequenceRecord& record,
                                      bool include_timing);

std::string render(const SequenceRecord& record, Format format,
                   bool include_timing = false);

}  // namespace bhg::cli

#endif  // BHG_CLI_SEQUENCE_IO_HPP
