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
#include "lps/fixpoint.hpp"
#include "testing.hpp"

#include <doctest.h>

#include <random>

using namespace lps;

namespace {

const Program& ex1() {
    static const Program p = parse_program("p. q :- p, not r. r :- not q. s :- not t.");
    return p;
}

AtomSet set(const Program& p, const char* csv) { return p.universe().parse_list(csv); }

} // namespace

TEST_CASE("one step of T_P") {
    Program p = parse_program("p. q :- p.");
    CHECK(tp_step(p, set(p, "p")) == set(p, "p,q"));
    CHECK(tp_step(p, {}) == set(p, "p"));
    CHECK_THROWS_AS(tp_step(ex1(), {}), Error);
}

TEST_CASE("least model of a Horn program") {
    Program p = parse_program("p. q :- p. s.");
    CHECK(least_model(p) == set(p, "p,q,s"));
    CHECK(least_model(parse_program("p :- q. q :- p.")) == AtomSet{});
    try {
        least_model(ex1());
        FAIL("expected NotHorn");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotHorn);
        CHECK(std::string(e.what()).find("q :- p, not r.") != std::string::npos);
    }
}

TEST_CASE("T_{P,M} step and fixpoint") {
    const Program& p = ex1();
    CHECK(tpm_step(p, set(p, "p,q,s"), {}) == set(p, "p,s"));
    CHECK(tpm_lfp(p, set(p, "p,q,s")) == set(p, "p,q,s"));
}

TEST_CASE("GL reduct") {
    const Program& p = ex1();
    Program r1 = gl_reduct(p, set(p, "p,q,s"));
    CHECK(r1.clauses() == parse_program("#atoms p, q, r, s, t. p. q :- p. s.").clauses());
    Program r2 = gl_reduct(p, set(p, "p,r,s"));
    CHECK(r2.clauses() == parse_program("#atoms p, q, r, s, t. p. r. s.").clauses());
    CHECK(r1.universe() == p.universe());
    CHECK(r1.is_horn());
}

TEST_CASE("GL operator") {
    const Program& p = ex1();
    CHECK(gl_operator(p, set(p, "p,q,s")) == set(p, "p,q,s"));
    CHECK(gl_operator(p, {}) == set(p, "p,q,r,s"));
    CHECK(gl_operator(p, p.universe().all()) == set(p, "p"));
}

TEST_CASE("stable models") {
    const Program& p = ex1();
    CHECK(is_stable_model(p, set(p, "p,q,s")));
    CHECK_FALSE(is_stable_model(p, set(p, "p,q,r,s")));
    CHECK(stable_models_bruteforce(p) == std::vector<Interpretation>{set(p, "p,q,s"), set(p, "p,r,s")});
    CHECK(stable_models_bruteforce(parse_program("p :- not p.")).empty());
    CHECK(stable_models_bruteforce(Program{}) == std::vector<Interpretation>{AtomSet{}});
}

TEST_CASE("brute force refuses large universes") {
    Program wide(testing::numbered_universe(21), {});
    CHECK_THROWS_AS(stable_models_bruteforce(wide), Error);
    CHECK(stable_models_bruteforce(wide, 21).size() == 1);
}

TEST_CASE("property: GL matches the direct definition") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        Program p = testing::random_program(rng, {});
        for (const auto& m : testing::all_subsets(p.atom_count())) {
            CHECK(gl_operator(p, m) == testing::naive_gl(p, m));
            CHECK(tpm_lfp(p, m) == least_model(gl_reduct(p, m)));
        }
        CHECK(stable_models_bruteforce(p) == testing::naive_stable_models(p));
    }
}

TEST_CASE("property: duplicated clauses do not change GL") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        Program p = testing::random_program(rng, {});
        auto doubled = p.clauses();
        doubled.insert(doubled.end(), p.clauses().begin(), p.clauses().end());
        Program q(p.universe(), doubled);
        for (const auto& m : testing::all_subsets(p.atom_count())) CHECK(gl_operator(q, m) == gl_operator(p, m));
    }
}

TEST_CASE("property: GL is antimonotone") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 100; ++i) {
        Program p = testing::random_program(rng, {5, 8, 3});
        auto subsets = testing::all_subsets(p.atom_count());
        for (const auto& x : subsets) {
            for (const auto& y : subsets) {
                if (x.subset_of(y)) CHECK(gl_operator(p, y).subset_of(gl_operator(p, x)));
            }
        }
    }
}
