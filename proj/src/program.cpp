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

#include "lps/program.hpp"

#include "lexer.hpp"
#include "lps/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lps {

using detail::Lexer;
using detail::Tok;
using detail::Token;

Program::Program(Universe universe, std::vector<Clause> clauses) : universe_(std::move(universe)) {
    for (auto& c : clauses) add(std::move(c));
}

void Program::add(Clause c) {
    auto check = [&](AtomId a) {
        if (a >= universe_.size()) {
            throw Error(ErrorCode::InvalidArgument, "clause mentions atom id outside the universe");
        }
    };
    check(c.head);
    for (AtomId a : c.pos) check(a);
    for (AtomId a : c.neg) check(a);
    clauses_.push_back(std::move(c));
}

bool Program::is_horn() const {
    return std::all_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.is_horn(); });
}

namespace {

struct RawLiteral {
    std::string atom;
    bool negated;
};

struct RawClause {
    std::string head;
    std::vector<RawLiteral> body;
};

Token expect_atom(Lexer& lex) {
    Token t = lex.expect(Tok::Name, "atom");
    if (!is_valid_atom_name(t.text)) lex.fail(t, "invalid atom name '" + t.text + "'");
    return t;
}

} // namespace

Program parse_program(std::string_view text) {
    Lexer lex(text);
    std::vector<std::string> declared;
    std::vector<RawClause> raw;

    while (lex.peek().kind != Tok::End) {
        if (lex.peek().kind == Tok::Directive) {
            Token d = lex.take();
            if (d.text != "#atoms") lex.fail(d, "unknown directive '" + d.text + "'");
            declared.push_back(expect_atom(lex).text);
            while (lex.peek().kind == Tok::Comma) {
                lex.take();
                declared.push_back(expect_atom(lex).text);
            }
            lex.expect(Tok::Dot, "'.'");
            continue;
        }
        RawClause rc;
        if (lex.peek().kind == Tok::LBrace) {
            throw ParseError(ErrorCode::CompoundHead, lex.peek().line, lex.peek().column,
                             "rule heads must be single atoms");
        }
        rc.head = expect_atom(lex).text;
        if (lex.peek().kind == Tok::Comma || lex.peek().kind == Tok::Semicolon) {
            throw ParseError(ErrorCode::CompoundHead, lex.peek().line, lex.peek().column,
                             "rule heads must be single atoms, found '" + lex.peek().text + "' after '" + rc.head + "'");
        }
        if (lex.peek().kind == Tok::Arrow) {
            lex.take();
            do {
                if (!rc.body.empty()) lex.take();
                bool negated = false;
                if (lex.peek().kind == Tok::Name && lex.peek().text == "not" &&
                    lex.peek2().kind == Tok::Name) {
                    lex.take();
                    negated = true;
                }
                rc.body.push_back({expect_atom(lex).text, negated});
            } while (lex.peek().kind == Tok::Comma);
        }
        lex.expect(Tok::Dot, "'.'");
        raw.push_back(std::move(rc));
    }

    Universe u;
    for (const auto& name : declared) u.intern(name);
    for (const auto& rc : raw) {
        u.intern(rc.head);
        for (const auto& lit : rc.body) u.intern(lit.atom);
    }
    Program p(std::move(u), {});
    for (const auto& rc : raw) {
        Clause c;
        c.head = p.universe().at(rc.head);
        std::vector<AtomId> pos;
        std::vector<AtomId> neg;
        for (const auto& lit : rc.body) {
            (lit.negated ? neg : pos).push_back(p.universe().at(lit.atom));
        }
        c.pos = AtomSet(std::move(pos));
        c.neg = AtomSet(std::move(neg));
        p.add(std::move(c));
    }
    return p;
}

std::string format_clause(const Universe& u, const Clause& c) {
    std::string out = u.name(c.head);
    bool first = true;
    auto lit = [&](AtomId a, bool negated) {
        out += first ? " :- " : ", ";
        first = false;
        if (negated) out += "not ";
        out += u.name(a);
    };
    for (AtomId a : c.pos) lit(a, false);
    for (AtomId a : c.neg) lit(a, true);
    out += '.';
    return out;
}

std::string format_program(const Program& p) {
    const auto& u = p.universe();
    // The universe order survives a reparse only if it matches the order of
    // first occurrence in the printed clauses.
    Universe seen;
    for (const auto& c : p.clauses()) {
        seen.intern(u.name(c.head));
        for (AtomId a : c.pos) seen.intern(u.name(a));
        for (AtomId a : c.neg) seen.intern(u.name(a));
    }
    std::ostringstream os;
    if (!(seen == u)) {
        os << "#atoms ";
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (i) os << ", ";
            os << u.name(static_cast<AtomId>(i));
        }
        os << ".\n";
    }
    for (const auto& c : p.clauses()) os << format_clause(u, c) << '\n';
    return os.str();
}

Program horn_part(const Program& p) {
    std::vector<Clause> horn;
    for (const auto& c : p.clauses()) {
        if (c.is_horn()) horn.push_back(c);
    }
    return Program(p.universe(), std::move(horn));
}

bool is_purely_negative(const Program& p) {
    return std::all_of(p.clauses().begin(), p.clauses().end(),
                       [](const Clause& c) { return c.pos.empty(); });
}

bool is_stratified(const Program& p) {
    const std::size_t n = p.atom_count();
    // Edge body atom -> head.
    std::vector<std::vector<AtomId>> succ(n);
    for (const auto& c : p.clauses()) {
        for (AtomId a : c.pos) succ[a].push_back(c.head);
        for (AtomId a : c.neg) succ[a].push_back(c.head);
    }

    // Tarjan's strongly connected components.
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<AtomId> stack;
    int counter = 0;
    int comps = 0;
    std::function<void(AtomId)> visit = [&](AtomId v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (AtomId w : succ[v]) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            AtomId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = comps;
            } while (w != v);
            ++comps;
        }
    };
    for (AtomId v = 0; v < n; ++v) {
        if (index[v] < 0) visit(v);
    }

    for (const auto& c : p.clauses()) {
        for (AtomId a : c.neg) {
            if (comp[a] == comp[c.head]) return false;
        }
    }
    return true;
}

} // namespace lps
