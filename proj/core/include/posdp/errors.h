// Copyright 2026 The posdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POSDP_ERRORS_H_
#define POSDP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace posdp {

// Failure categories. The command-line tool maps these onto exit codes.
enum class ErrorCode {
  kDomain,         // invalid numeric input (empty vector, non-finite value)
  kInfeasibleCap,  // cap U below 1/n: the capped simplex is empty
  kBudget,         // strong composition exceeds the total privacy budget
  kParse,          // malformed document or mismatched dimensions
  kConfig,         // missing or out-of-range solver configuration
  kInternal,       // broken internal invariant
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error(ErrorCode::kDomain, message) {}
};

class InfeasibleCapError : public Error {
 public:
  explicit InfeasibleCapError(const std::string& message)
      : Error(ErrorCode::kInfeasibleCap, message) {}
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& message)
      : Error(ErrorCode::kBudget, message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorCode::kParse, message) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error(ErrorCode::kConfig, message) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error(ErrorCode::kInternal, message) {}
};

}  // namespace posdp

#endif  // POSDP_ERRORS_H_
