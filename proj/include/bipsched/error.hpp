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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bipsched {

using Vertex = std::uint32_t;

enum class ErrorCode {
  kNotBipartite,
  kDuplicateEdge,
  kSelfLoop,
  kVertexOutOfRange,
  kInvalidParams,
  kSyntaxError,
  kNotMaximum,
  kNotIndependent,
  kDegreeTooHigh,
  kK33Component,
  kInternalExhaustion,
  kClassCountMismatch,
  kPreconditionSpeed,
  kEquitableInfeasible,
  kBudgetExceeded,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kNotMaximum: return "NotMaximum";
    case ErrorCode::kNotIndependent: return "NotIndependent";
    case ErrorCode::kDegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::kK33Component: return "K33Component";
    case ErrorCode::kInternalExhaustion: return "InternalExhaustion";
    case ErrorCode::kClassCountMismatch: return "ClassCountMismatch";
    case ErrorCode::kPreconditionSpeed: return "PreconditionSpeed";
    case ErrorCode::kEquitableInfeasible: return "EquitableInfeasible";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

/// Library-wide exception. `witness()` carries vertex ids when the failure
/// has a certificate (the odd cycle for NotBipartite, the offending
/// component for K33Component). `line()` is set for parse errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<Vertex> witness = {}, std::size_t line = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Vertex>& witness() const noexcept { return witness_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::vector<Vertex> witness_;
  std::size_t line_;
};

}  // namespace bipsched
