// Copyright 2026 The lps Authors
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

#include "lps/error.hpp"

#include <string>

namespace lps {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::CompoundHead: return "CompoundHead";
    case ErrorCode::TooManyAtoms: return "TooManyAtoms";
    case ErrorCode::SupportExplosion: return "SupportExplosion";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::NotHorn: return "NotHorn";
    case ErrorCode::NotCCHorn: return "NotCCHorn";
    case ErrorCode::NotPurelyNegative: return "NotPurelyNegative";
    case ErrorCode::NotAntimonotone: return "NotAntimonotone";
    case ErrorCode::NotDecreasing: return "NotDecreasing";
    case ErrorCode::EqualSets: return "EqualSets";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : ParseError(ErrorCode::Syntax, line, column, msg) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& msg)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line), column_(column) {}

} // namespace lps
