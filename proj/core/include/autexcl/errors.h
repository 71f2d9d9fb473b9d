// Copyright 2026 The autexcl Authors
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

#ifndef AUTEXCL_ERRORS_H_
#define AUTEXCL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace autexcl {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (g < 2, N not prime, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Newton's identities produced a non-integer coefficient; the power sums
// cannot come from an integer Weil polynomial.
class NonIntegralError : public Error {
 public:
  using Error::Error;
};

// Inclusion-exclusion needed a point count the series does not hold.
class MissingCountError : public Error {
 public:
  using Error::Error;
};

// Data is well-formed but inconsistent (genus totals, functional equation,
// enumeration vs. predicted counts).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An enumeration would exceed the configured field-size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class FileNotFound : public Error {
 public:
  using Error::Error;
};

class SingularModel : public Error {
 public:
  using Error::Error;
};

}  // namespace autexcl

#endif  // AUTEXCL_ERRORS_H_
