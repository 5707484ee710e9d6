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
#include "lps/program.hpp"
#include "testing.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace lps;

namespace {

constexpr const char* kEx1 = "p. q :- p, not r. r :- not q. s :- not t.";

AtomId id(const Program& p, const char* name) { return p.universe().at(name); }

} // namespace

TEST_CASE("atom sets behave as sorted sets") {
    AtomSet s{3, 1, 3, 2};
    CHECK(s.size() == 3);
    CHECK(s == AtomSet{1, 2, 3});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(0));
    CHECK(AtomSet{1}.subset_of(s));
    CHECK_FALSE(AtomSet{0, 1}.subset_of(s));
    CHECK(s.intersection_size(AtomSet{0, 2, 3}) == 2);
    CHECK(s.minus(AtomSet{2}) == AtomSet{1, 3});
    CHECK(AtomSet::from_mask(0b1011).to_mask() == 0b1011);
    CHECK(AtomSet{0, 5} < AtomSet{1});
    s.erase(1);
    s.insert(7);
    CHECK(s == AtomSet{2, 3, 7});
}

TEST_CASE("universe interning and lookup") {
    Universe u;
    CHECK(u.intern("p") == 0);
    CHECK(u.intern("q") == 1);
    CHECK(u.intern("p") == 0);
    CHECK(u.at("q") == 1);
    CHECK_FALSE(u.find("r").has_value());
    CHECK_THROWS_AS(u.at("r"), Error);
    CHECK(u.parse_list("q, p") == AtomSet{0, 1});
    CHECK(u.parse_list("") == AtomSet{});
    CHECK(is_valid_atom_name("p1"));
    CHECK(is_valid_atom_name("12"));
    CHECK_FALSE(is_valid_atom_name("012"));
    CHECK_FALSE(is_valid_atom_name("not"));
    CHECK_FALSE(is_valid_atom_name(""));
}

TEST_CASE("parse the four-clause example") {
    Program p = parse_program(kEx1);
    REQUIRE(p.clauses().size() == 4);
    CHECK(p.universe().names() == std::vector<std::string>{"p", "q", "r", "s", "t"});
    const auto& c = p.clauses();
    CHECK(c[0] == Clause{id(p, "p"), {}, {}});
    CHECK(c[1] == Clause{id(p, "q"), AtomSet{id(p, "p")}, AtomSet{id(p, "r")}});
    CHECK(c[2] == Clause{id(p, "r"), {}, AtomSet{id(p, "q")}});
    CHECK(c[3] == Clause{id(p, "s"), {}, AtomSet{id(p, "t")}});
}

TEST_CASE("parse details") {
    SUBCASE("comments and whitespace") {
        Program p = parse_program("% header\np.   % fact\n\n q :- p.\n");
        CHECK(p.clauses().size() == 2);
    }
    SUBCASE("declared atoms come first") {
        Program p = parse_program("#atoms z, y.\np :- not y.");
        CHECK(p.universe().names() == std::vector<std::string>{"z", "y", "p"});
    }
    SUBCASE("empty program") {
        Program p = parse_program("% nothing\n");
        CHECK(p.clauses().empty());
        CHECK(p.atom_count() == 0);
    }
    SUBCASE("numeric atom names") {
        Program p = parse_program("1 :- not 2.");
        CHECK(p.universe().names() == std::vector<std::string>{"1", "2"});
    }
    SUBCASE("overlapping bodies are kept") {
        Program p = parse_program("p :- q, not q.");
        CHECK(p.clauses()[0].pos == p.clauses()[0].neg);
    }
}

TEST_CASE("syntax errors carry positions") {
    auto line_of = [](const char* text) {
        try {
            parse_program(text);
        } catch (const ParseError& e) {
            CHECK(e.code() == ErrorCode::Syntax);
            return e.line();
        }
        FAIL("expected a parse error");
        return std::size_t{0};
    };
    CHECK(line_of("p :- q") == 1);
    CHECK(line_of("p.\nq :- p,, r.") == 2);
    CHECK(line_of("p :- not.") == 1);
    CHECK(line_of("not :- p.") == 1);
    CHECK(line_of("p :- q ; r.") == 1);
    CHECK(line_of("p.\n\n  012.") == 3);
}

TEST_CASE("compound heads are rejected") {
    CHECK_THROWS_AS(parse_program("p, q :- r."), ParseError);
    try {
        parse_program("{p} :- q.");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::CompoundHead);
    }
}

TEST_CASE("formatting") {
    Program p = parse_program(kEx1);
    CHECK(format_clause(p.universe(), p.clauses()[1]) == "q :- p, not r.");
    CHECK(format_clause(p.universe(), p.clauses()[0]) == "p.");
    CHECK(parse_program(format_program(p)) == p);
    Program declared = parse_program("#atoms t, s.\ns :- not t.");
    CHECK(parse_program(format_program(declared)) == declared);
}

TEST_CASE("horn part") {
    Program p = parse_program(kEx1);
    Program h = horn_part(p);
    REQUIRE(h.clauses().size() == 1);
    CHECK(h.clauses()[0] == p.clauses()[0]);
    CHECK(h.universe() == p.universe());
    CHECK(horn_part(Program{}).clauses().empty());
}

TEST_CASE("purely negative and stratified") {
    CHECK_FALSE(is_purely_negative(parse_program(kEx1)));
    CHECK(is_purely_negative(parse_program("p :- not q. q :- not p.")));
    CHECK(is_purely_negative(parse_program("p.")));
    CHECK_FALSE(is_stratified(parse_program(kEx1)));
    CHECK(is_stratified(parse_program("s :- not t.")));
    CHECK_FALSE(is_stratified(parse_program("p :- not p.")));
    CHECK(is_stratified(parse_program("p :- q. q :- p. r :- not p.")));
    CHECK_FALSE(is_stratified(parse_program("p :- q. q :- not p.")));
}

TEST_CASE("property: format and parse round-trip on random programs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Program p = testing::random_program(rng, {});
        Program q = parse_program(format_program(p));
        CHECK(q == p);
        CHECK(format_program(q) == format_program(p));
    }
}

TEST_CASE("property: horn part keeps exactly the negation-free clauses") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        Program p = testing::random_program(rng, {});
        auto expected = std::count_if(p.clauses().begin(), p.clauses().end(),
                                      [](const Clause& c) { return c.neg.empty(); });
        Program h = horn_part(p);
        CHECK(static_cast<long>(h.clauses().size()) == expected);
        CHECK(h.is_horn());
    }
}

TEST_CASE("property: stratification ignores clause order") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        Program p = testing::random_program(rng, {});
        auto clauses = p.clauses();
        std::shuffle(clauses.begin(), clauses.end(), rng);
        CHECK(is_stratified(Program(p.universe(), clauses)) == is_stratified(p));
    }
}
