// Copyright 2026 The qss Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qss {

enum class ErrorKind {
    InvalidField,
    ZeroInverse,
    LengthMismatch,
    DimensionMismatch,
    LinearlyDependent,
    NotSelfOrthogonal,
    InvalidCode,
    NotCorrectable,
    NotInDual,
    NotInSelfDual,
    NotInStabilizer,
    DecompositionMismatch,
    TooLarge,
    IndexOutOfRange,
    PreparationFailed,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` identifies the failure.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Parse failure carrying the 1-based line number of the offending input line.
class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string &message);

    std::size_t line() const noexcept {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace qss
