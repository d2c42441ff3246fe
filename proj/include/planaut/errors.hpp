// Copyright 2026 The planaut Authors.
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

namespace planaut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different variable tables.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain: negative exponents where
/// they are not allowed, parameters out of range, x_a = 0, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exact m-th root required by the construction is not rational.
class NoRationalRoot : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A polynomial expected to be m-triangular is not.
class WitnessMissing : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed expression or map file. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Leading-form reduction stalled or the Jacobian is not a nonzero constant.
class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

/// A map over the Laurent ring in Z still carries a negative power of Z.
class NegativeZPower : public Error {
 public:
  using Error::Error;
};

}  // namespace planaut
