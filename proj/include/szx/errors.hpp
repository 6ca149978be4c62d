// Copyright 2026 The SZX Authors
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

namespace szx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix dimensions do not fit the requested operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Sequential composition of diagrams whose boundary types differ.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// A constructor or rule was given parameters outside its schema.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The interpreter would exceed its qubit budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Structural problem in a diagram tree (e.g. a path that does not exist).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A rule side does not match the subtree it is applied to.
class MatchError : public Error {
 public:
  using Error::Error;
};

/// Two diagrams of different types were compared.
class ComparisonError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace szx
