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

#include "mftts/error.hpp"

namespace mftts {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::OovWord: return "OovWord";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::TokenizationMismatch: return "TokenizationMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyTable: return "EmptyTable";
    case ErrorCode::AlignmentError: return "AlignmentError";
    case ErrorCode::CorruptFile: return "CorruptFile";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::InvalidBand: return "InvalidBand";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::NumericalError: return "NumericalError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace mftts
