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

#ifndef BHG_ERRORS_HPP
#define BHG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bhg {

// Base for every runtime failure raised by the library. Precondition
// violations on arguments use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource guard (memory cap, scan cap, time cap, enumeration
// limit) was hit.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Checked 64-bit arithmetic overflowed. Lower n or h.
class OverflowError : public GuardExceeded {
 public:
  using GuardExceeded::GuardExceeded;
};

// No admissible candidate exists at or below the proven scan ceiling. For the
// strong greedy this contradicts the growth theorem and means a bug.
class ScanExceededBound : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bhg

#endif  // BHG_ERRORS_HPP
