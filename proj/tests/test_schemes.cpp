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

#include "lps/equations.hpp"
#include "lps/error.hpp"
#include "lps/fixpoint.hpp"
#include "lps/oplab.hpp"
#include "lps/schemes.hpp"
#include "testing.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace lps;

namespace {

const Program& ex1() {
    static const Program p = parse_program("p. q :- p, not r. r :- not q. s :- not t.");
    return p;
}

AtomSet set(const Program& p, const char* csv) { return p.universe().parse_list(csv); }

// Minimal supports recovered from exhaustive irredundant scheme enumeration.
std::vector<AtomSet> minimal_from_schemes(const Program& p, AtomId target) {
    std::vector<AtomSet> supports;
    for (const auto& s : enumerate_schemes(p, target, p.atom_count())) supports.push_back(s.support);
    auto out = minimize_antichain(std::move(supports));
    std::sort(out.begin(), out.end(), SupportLess{});
    return out;
}

} // namespace

TEST_CASE("scheme validation") {
    const Program& p = ex1();
    const AtomId pa = p.universe().at("p");
    const AtomId q = p.universe().at("q");
    ProofScheme a{{{0, pa}}, {}};
    ProofScheme b{{{0, pa}, {1, q}}, set(p, "r")};
    CHECK(validate_scheme(p, a));
    CHECK(validate_scheme(p, b));
    CHECK_FALSE(validate_scheme(p, ProofScheme{{{1, q}}, set(p, "r")}));
    CHECK_FALSE(validate_scheme(p, ProofScheme{{{0, pa}, {1, q}}, {}}));
    CHECK_FALSE(validate_scheme(p, ProofScheme{{{0, q}}, {}}));
    CHECK_FALSE(validate_scheme(p, ProofScheme{}));
    CHECK(admits(set(p, "p,q,s"), b));
    CHECK_FALSE(admits(set(p, "p,r,s"), b));
}

TEST_CASE("scheme enumeration") {
    const Program& p = ex1();
    auto q_schemes = enumerate_schemes(p, p.universe().at("q"), 2);
    REQUIRE(q_schemes.size() == 1);
    CHECK(q_schemes[0] == ProofScheme{{{0, 0}, {1, 1}}, set(p, "r")});
    auto p_schemes = enumerate_schemes(p, p.universe().at("p"), 3);
    REQUIRE(p_schemes.size() == 1);
    CHECK(p_schemes[0] == ProofScheme{{{0, 0}}, {}});
    CHECK(enumerate_schemes(p, p.universe().at("t"), 5).empty());
    CHECK(enumerate_schemes(p, p.universe().at("q"), 1).empty());
}

TEST_CASE("scheme enumeration orders by length, then clause sequence") {
    Program p = parse_program("a :- not x. b :- a. b :- not y. c :- b.");
    auto schemes = enumerate_schemes(p, p.universe().at("c"), 4);
    REQUIRE(schemes.size() == 2);
    CHECK(schemes[0].length() == 2);
    CHECK(schemes[0].support == set(p, "y"));
    CHECK(schemes[1].length() == 3);
    CHECK(schemes[1].support == set(p, "x"));
    for (const auto& s : schemes) CHECK(validate_scheme(p, s));
}

TEST_CASE("supports of the example") {
    const Program& p = ex1();
    const AtomId r = p.universe().at("r");
    CHECK(all_supports(p, r) == std::vector<AtomSet>{set(p, "q"), set(p, "q,r"), set(p, "q,t"), set(p, "q,r,t")});
    CHECK(derivation_supports(p)[r] == std::vector<AtomSet>{set(p, "q")});
    CHECK(minimal_supports(p, p.universe().at("q")) == std::vector<AtomSet>{set(p, "r")});
    CHECK(minimal_supports(p, r) == std::vector<AtomSet>{set(p, "q")});
    CHECK(minimal_supports(p, p.universe().at("p")) == std::vector<AtomSet>{AtomSet{}});
    CHECK(minimal_supports(p, p.universe().at("t")).empty());
}

TEST_CASE("supports of the program families") {
    Program ex3 = family_program(Family::Ex3, 3);
    const AtomId p = ex3.universe().at("p");
    CHECK(all_supports(ex3, p) ==
          std::vector<AtomSet>{set(ex3, "p1"), set(ex3, "p1,p2"), set(ex3, "p1,p2,p3")});
    for (std::size_t n = 1; n <= 6; ++n) {
        Program f = family_program(Family::Ex3, n);
        CHECK(minimal_supports(f, AtomId{0}) == std::vector<AtomSet>{set(f, "p1")});
        Program e = family_program(Family::E2, n);
        auto ms = minimal_supports(e, AtomId{0});
        REQUIRE(ms.size() == n);
        for (std::size_t i = 0; i < n; ++i) CHECK(ms[i] == AtomSet{static_cast<AtomId>(i + 1)});
    }
}

TEST_CASE("support explosion is reported") {
    Program e = family_program(Family::E2, 4);
    try {
        all_supports(e, std::size_t{2});
        FAIL("expected SupportExplosion");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::SupportExplosion);
    }
}

TEST_CASE("GL through supports on the example") {
    const Program& p = ex1();
    CHECK(gl_via_schemes(p, set(p, "p,q,s")) == set(p, "p,q,s"));
    CHECK(gl_via_schemes(p, {}) == set(p, "p,q,r,s"));
    CHECK(stable_models_via_schemes(p, 20) == std::vector<Interpretation>{set(p, "p,q,s"), set(p, "p,r,s")});
}

TEST_CASE("antichain minimization") {
    std::vector<AtomSet> sets{AtomSet{1, 2}, AtomSet{1}, AtomSet{1}, AtomSet{3}, AtomSet{2, 3}};
    auto out = minimize_antichain(sets);
    std::sort(out.begin(), out.end());
    CHECK(out == std::vector<AtomSet>{AtomSet{1}, AtomSet{3}});
    CHECK(minimize_antichain({AtomSet{}, AtomSet{4}}) == std::vector<AtomSet>{AtomSet{}});
}

TEST_CASE("property: GL via minimal supports equals the operator") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 150; ++i) {
        Program p = testing::random_program(rng, {});
        SupportFamily minimal = minimal_supports(p);
        for (const auto& m : testing::all_subsets(p.atom_count())) {
            CHECK(gl_via_schemes(minimal, m) == testing::naive_gl(p, m));
            CHECK(is_stable_via_schemes(minimal, m) == (testing::naive_gl(p, m) == m));
        }
    }
}

TEST_CASE("property: saturation agrees with scheme enumeration") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 150; ++i) {
        Program p = testing::random_program(rng, {5, 8, 2});
        SupportFamily minimal = minimal_supports(p);
        SupportFamily all = all_supports(p);
        for (AtomId a = 0; a < p.atom_count(); ++a) {
            CHECK(minimal[a] == minimal_from_schemes(p, a));
            for (const auto& s : enumerate_schemes(p, a, p.atom_count())) {
                CHECK(validate_scheme(p, s));
                CHECK(std::find(all[a].begin(), all[a].end(), s.support) != all[a].end());
            }
            auto reduced = minimize_antichain(all[a]);
            std::sort(reduced.begin(), reduced.end(), SupportLess{});
            CHECK(reduced == minimal[a]);
            CHECK(std::is_sorted(all[a].begin(), all[a].end(), SupportLess{}));
        }
    }
}

TEST_CASE("property: stable models through supports equal brute force") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 150; ++i) {
        Program p = testing::random_program(rng, {});
        CHECK(stable_models_via_schemes(p, 20) == testing::naive_stable_models(p));
    }
}
