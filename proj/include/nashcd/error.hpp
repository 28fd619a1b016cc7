// Copyright 2026 The nashcd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NASHCD_ERROR_HPP_
#define NASHCD_ERROR_HPP_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nashcd {

enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kStepCapExceeded,
  kIoError,
  kAuditFailure,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Input text that could not be turned into a graph. `line` is 1-based, or 0
// when the problem is not tied to a particular line (e.g. an empty file).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::kParseError,
              line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

using WarningHandler = std::function<void(std::string_view)>;

// Installs the sink for non-fatal diagnostics (degenerate graphs, dropped
// self-loops, ...). Passing an empty handler restores the stderr default.
void set_warning_handler(WarningHandler handler);
void warn(std::string_view message);

}  // namespace nashcd

#endif  // NASHCD_ERROR_HPP_
