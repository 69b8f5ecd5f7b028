// Copyright 2026 The Honey-X Authors.
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

#ifndef HONEYX_ERROR_HPP_
#define HONEYX_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace honeyx {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller bug: LP dimensions inconsistent, NaN data, lower > upper.
class MalformedProblem : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A deception matrix exceeds its operator 1-norm budget.
class BudgetViolation : public Error {
 public:
  using Error::Error;
};

// An LP that must be solvable came back infeasible or unbounded.
class SolverFailure : public Error {
 public:
  using Error::Error;
};

class InvalidInterval : public Error {
 public:
  using Error::Error;
};

// Requested guarantee level is not inducible under the budget.
class InfeasibleLevel : public Error {
 public:
  using Error::Error;
};

// Invalid user-facing argument (negative budget, bad tolerance, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input text or file that does not match the expected JSON format.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace honeyx

#endif  // HONEYX_ERROR_HPP_
