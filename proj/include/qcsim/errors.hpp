// Copyright 2026 The qcsim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qcsim {

// Error with source position, thrown by the .qc and DIMACS parsers.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error(format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& message, int line, int column) {
    return "parse error at " + std::to_string(line) + ":" +
           std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

// A backend was asked to process a gate it cannot represent.
class UnsupportedGateError : public std::runtime_error {
public:
  explicit UnsupportedGateError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace qcsim
