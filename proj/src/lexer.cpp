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

#include "lexer.hpp"

#include <cctype>

namespace lps::detail {

const char* describe(Tok kind) {
    switch (kind) {
    case Tok::Name: return "atom";
    case Tok::Arrow: return "':-'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Semicolon: return "';'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Directive: return "directive";
    case Tok::End: return "end of input";
    }
    return "token";
}

Token Lexer::scan() {
    for (;;) {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] == '%') {
            while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            continue;
        }
        break;
    }
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= text_.size()) {
        t.kind = Tok::End;
        return t;
    }
    auto bump = [&](std::size_t n) {
        t.text.assign(text_.substr(pos_, n));
        pos_ += n;
        col_ += n;
    };
    char c = text_[pos_];
    auto is_word = [](char ch) {
        auto u = static_cast<unsigned char>(ch);
        return std::isalnum(u) || ch == '_';
    };
    if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        t.kind = Tok::Arrow;
        bump(2);
    } else if (c == ',') {
        t.kind = Tok::Comma;
        bump(1);
    } else if (c == '.') {
        t.kind = Tok::Dot;
        bump(1);
    } else if (c == ';') {
        t.kind = Tok::Semicolon;
        bump(1);
    } else if (c == '{') {
        t.kind = Tok::LBrace;
        bump(1);
    } else if (c == '}') {
        t.kind = Tok::RBrace;
        bump(1);
    } else if (c == '#') {
        std::size_t n = 1;
        while (pos_ + n < text_.size() && is_word(text_[pos_ + n])) ++n;
        t.kind = Tok::Directive;
        bump(n);
    } else if (is_word(c)) {
        std::size_t n = 1;
        while (pos_ + n < text_.size() && is_word(text_[pos_ + n])) ++n;
        t.kind = Tok::Name;
        bump(n);
    } else {
        throw ParseError(t.line, t.column, std::string("unexpected character '") + c + "'");
    }
    return t;
}

void Lexer::advance() {
    if (has_next_) {
        cur_ = std::move(next_);
        has_next_ = false;
    } else {
        cur_ = scan();
    }
}

const Token& Lexer::peek2() {
    if (!has_next_) {
        next_ = scan();
        has_next_ = true;
    }
    return next_;
}

Token Lexer::take() {
    Token t = cur_;
    advance();
    return t;
}

Token Lexer::expect(Tok kind, const char* what) {
    if (cur_.kind != kind) {
        fail(cur_, std::string("expected ") + what + ", found " +
                       (cur_.kind == Tok::End ? std::string("end of input") : "'" + cur_.text + "'"));
    }
    return take();
}

void Lexer::fail(const Token& at, const std::string& msg) const {
    throw ParseError(at.line, at.column, msg);
}

} // namespace lps::detail
