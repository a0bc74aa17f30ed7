// Copyright 2026 The tropdiv Authors
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

#ifndef TROPDIV_ERRORS_H_
#define TROPDIV_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropdiv {

enum class ErrorKind {
  kValidation,    // malformed or inconsistent input data
  kPrecondition,  // well-formed input outside an operation's domain
  kBinding,       // divisor/graph mismatch
  kRefinement,    // point not representable on the working grid
  kResource,      // configured size cap exceeded
  kInternal,      // a proven invariant failed; always a bug
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorKind::kValidation, message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error(ErrorKind::kPrecondition, message) {}

 protected:
  PreconditionError(ErrorKind kind, const std::string& message)
      : Error(kind, message) {}
};

class BindingError : public PreconditionError {
 public:
  explicit BindingError(const std::string& message)
      : PreconditionError(ErrorKind::kBinding, message) {}
};

class RefinementError : public PreconditionError {
 public:
  explicit RefinementError(const std::string& message)
      : PreconditionError(ErrorKind::kRefinement, message) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message)
      : Error(ErrorKind::kResource, message) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error(ErrorKind::kInternal, message) {}
};

inline std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation:
      return "validation";
    case ErrorKind::kPrecondition:
      return "precondition";
    case ErrorKind::kBinding:
      return "binding";
    case ErrorKind::kRefinement:
      return "refinement";
    case ErrorKind::kResource:
      return "resource";
    case ErrorKind::kInternal:
      return "internal";
  }
  return "unknown";
}

}  // namespace tropdiv

#endif  // TROPDIV_ERRORS_H_
