// Copyright 2026 The rankarg Authors.
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

#ifndef RANKARG_ERROR_HPP_
#define RANKARG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rankarg {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class UnknownArgument : public Error {
 public:
  explicit UnknownArgument(const std::string& name)
      : Error("unknown argument '" + name + "'") {}
};

class InvalidFramework : public Error {
 public:
  using Error::Error;
};

// Raised by operations that are only defined on acyclic frameworks.
class CyclicFramework : public Error {
 public:
  CyclicFramework() : Error("cyclic framework") {}
};

// The semantics below are the ones whose failures make a property check
// inconclusive rather than violated.
class SemanticsError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public SemanticsError {
 public:
  NonConvergence(const std::string& what, int iterations)
      : SemanticsError(what + " did not converge after " +
                       std::to_string(iterations) + " iterations") {}
};

class SizeCapExceeded : public SemanticsError {
 public:
  SizeCapExceeded(int size, int cap)
      : SemanticsError("game size " + std::to_string(size) +
                       " exceeds cap " + std::to_string(cap)) {}
};

class SolverFailure : public SemanticsError {
 public:
  using SemanticsError::SemanticsError;
};

}  // namespace rankarg

#endif  // RANKARG_ERROR_HPP_
