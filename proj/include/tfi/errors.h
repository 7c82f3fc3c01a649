// Copyright 2026 The TFI Authors
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

#ifndef TFI_ERRORS_H_
#define TFI_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tfi {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside the documented domain of an operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed FIMI input. Carries the 1-based line number of the bad token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Invalid ground-truth distribution (probabilities, duplicate support).
class ModelError : public Error {
 public:
  using Error::Error;
};

// Input violates a structural precondition (e.g. a family that must be
// downward-closed is not).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// The requested thresholds cannot be realized, e.g. theta - eps <= 0.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A configured size or search-effort cap was exceeded.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace tfi

#endif  // TFI_ERRORS_H_
