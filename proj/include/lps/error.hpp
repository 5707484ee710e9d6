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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lps {

enum class ErrorCode {
    Syntax,
    CompoundHead,
    TooManyAtoms,
    SupportExplosion,
    Timeout,
    NotHorn,
    NotCCHorn,
    NotPurelyNegative,
    NotAntimonotone,
    NotDecreasing,
    EqualSets,
    UnknownAtom,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Base exception for every domain failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Syntax error carrying a 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg);
    ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& msg);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace lps
