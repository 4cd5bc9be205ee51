// Copyright 2026 The folicalc Authors
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

#ifndef FOLICALC_ERRORS_H_
#define FOLICALC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace folicalc {

// Raised for malformed or inconsistent input: unknown variables, index
// ranges, degree mismatches, reserved names.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when two operands live on different charts.
class ChartMismatch : public InputError {
 public:
  using InputError::InputError;
};

struct SourcePosition {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePosition&, const SourcePosition&) = default;
};

// A diagnostic carrying the 1-based line/column of the offending token.
class ParseError : public InputError {
 public:
  ParseError(SourcePosition position, const std::string& message)
      : InputError(std::to_string(position.line) + ":" +
                   std::to_string(position.column) + ": " + message),
        position_(position),
        detail_(message) {}

  SourcePosition position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  SourcePosition position_;
  std::string detail_;
};

}  // namespace folicalc

#endif  // FOLICALC_ERRORS_H_
