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

#include "lps/error.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace lps::detail {

enum class Tok { Name, Arrow, Comma, Dot, Semicolon, LBrace, RBrace, Directive, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Tokenizer shared by the normal and cardinality-constraint grammars.
/// `%` comments run to end of line. Names are identifiers or digit strings.
class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const noexcept { return cur_; }
    const Token& peek2();
    Token take();
    Token expect(Tok kind, const char* what);
    [[noreturn]] void fail(const Token& at, const std::string& msg) const;

private:
    Token scan();
    void advance();

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    Token cur_;
    Token next_;
    bool has_next_ = false;
};

const char* describe(Tok kind);

} // namespace lps::detail
