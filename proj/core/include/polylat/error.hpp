// Copyright 2026 The Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polylat {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checked rational arithmetic left the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A value violates the invariants of the type being constructed. The message
// carries the witness (offending element, pair, or set).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Two operands live over different ground/vertex sets.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed. Line and column are 1-based; column 0 means
// the whole line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) +
              (column ? ", column " + std::to_string(column) : "") + ": " +
              what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polylat
