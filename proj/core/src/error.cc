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

#include "qss/error.h"

namespace qss {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidField:
            return "InvalidField";
        case ErrorKind::ZeroInverse:
            return "ZeroInverse";
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::LinearlyDependent:
            return "LinearlyDependent";
        case ErrorKind::NotSelfOrthogonal:
            return "NotSelfOrthogonal";
        case ErrorKind::InvalidCode:
            return "InvalidCode";
        case ErrorKind::NotCorrectable:
            return "NotCorrectable";
        case ErrorKind::NotInDual:
            return "NotInDual";
        case ErrorKind::NotInSelfDual:
            return "NotInSelfDual";
        case ErrorKind::NotInStabilizer:
            return "NotInStabilizer";
        case ErrorKind::DecompositionMismatch:
            return "DecompositionMismatch";
        case ErrorKind::TooLarge:
            return "TooLarge";
        case ErrorKind::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorKind::PreparationFailed:
            return "PreparationFailed";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {}

ParseError::ParseError(std::size_t line, const std::string &message)
    : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace qss
