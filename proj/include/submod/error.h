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

#ifndef SUBMOD_ERROR_H_
#define SUBMOD_ERROR_H_

#include <stdexcept>
#include <string>

namespace submod {

enum class ErrorKind {
  kInvalidConstraint,
  kInvalidElement,
  kInvalidSolution,
  kWrongObjective,
  kConfig,
  kParse,
  kShape,
  kValue,
  kSizeGuard,
  kEmptyInput,
  kIo,
  kPrecondition,
};

const char* ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception. The kind is what
// callers (the CLI in particular) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidConstraint: return "invalid constraint";
    case ErrorKind::kInvalidElement: return "invalid element";
    case ErrorKind::kInvalidSolution: return "invalid solution";
    case ErrorKind::kWrongObjective: return "wrong objective";
    case ErrorKind::kConfig: return "config error";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kShape: return "shape error";
    case ErrorKind::kValue: return "value error";
    case ErrorKind::kSizeGuard: return "size guard";
    case ErrorKind::kEmptyInput: return "empty input";
    case ErrorKind::kIo: return "i/o error";
    case ErrorKind::kPrecondition: return "precondition violated";
  }
  return "error";
}

}  // namespace submod

#endif  // SUBMOD_ERROR_H_
