// Copyright (c) 2026 The mftts Authors
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

#ifndef MFTTS_ERROR_HPP_
#define MFTTS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mftts {

// Stable error codes. The CLI prints them as ERROR[<name>] so scripts can
// grep for a fixed prefix.
enum class ErrorCode {
  InvalidCharacter,
  OovWord,
  MalformedTree,
  TokenizationMismatch,
  DimensionMismatch,
  EmptyTable,
  AlignmentError,
  CorruptFile,
  NonFiniteValue,
  InvalidBand,
  TooShort,
  IndexError,
  ShapeError,
  ConfigError,
  NumericalError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace mftts

#endif  // MFTTS_ERROR_HPP_
