// Copyright 2026 The PSMRLab Authors. All rights reserved.
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

#ifndef PSMRLAB_ERROR_H_
#define PSMRLAB_ERROR_H_

#include <stdexcept>
#include <string>

namespace psmrlab {

// Failure categories. The numeric values match the C API status codes.
enum class ErrorKind {
  kInvalidArgument = 1,
  kParse = 2,
  kValidation = 3,
  kCompatibility = 4,
  kNumerical = 5,
  kRuntime = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Index or argument outside the operation's domain.
class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& m)
      : Error(ErrorKind::kInvalidArgument, m) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& m) : Error(ErrorKind::kParse, m) {}
};

// A structurally well-formed object violates a domain invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& m)
      : Error(ErrorKind::kValidation, m) {}
};

// Learner and feedback model do not fit together.
class CompatibilityError : public Error {
 public:
  explicit CompatibilityError(const std::string& m)
      : Error(ErrorKind::kCompatibility, m) {}
};

// Iteration caps, singular systems, failed pivoting.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& m)
      : Error(ErrorKind::kNumerical, m) {}
};

class RuntimeError : public Error {
 public:
  explicit RuntimeError(const std::string& m)
      : Error(ErrorKind::kRuntime, m) {}
};

}  // namespace psmrlab

#endif  // PSMRLAB_ERROR_H_
