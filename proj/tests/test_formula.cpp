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
#include "lps/formula.hpp"
#include "testing.hpp"

#include <doctest.h>

#include <random>

using namespace lps;

namespace {

using F = Formula;

// Atoms named "1".."6" get ids 0..5.
Universe six() {
    Universe u;
    for (int i = 1; i <= 6; ++i) u.intern(std::to_string(i));
    return u;
}

F phi_u1() {
    return F::conj({F::disj({F::neg(0), F::neg(1), F::neg(2)}), F::disj({F::neg(3), F::neg(4), F::neg(5)})});
}

F phi_u2() {
    std::vector<F> pairs;
    for (AtomId i = 0; i < 6; ++i) {
        for (AtomId j = i + 1; j < 6; ++j) pairs.push_back(F::conj({F::neg(i), F::neg(j)}));
    }
    return F::disj(std::move(pairs));
}

F random_formula(std::mt19937_64& rng, std::size_t atoms, int depth) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 6 : 3);
    std::uniform_int_distribution<AtomId> atom(0, static_cast<AtomId>(atoms - 1));
    switch (kind(rng)) {
    case 0: return F::atom(atom(rng));
    case 1: return F::neg(atom(rng));
    case 2: return F::atom(atom(rng));
    case 3: return std::uniform_int_distribution<int>(0, 9)(rng) == 0 ? F::truth() : F::neg(atom(rng));
    case 4:
    case 5: {
        std::vector<F> kids;
        for (int k = std::uniform_int_distribution<int>(0, 3)(rng); k > 0; --k)
            kids.push_back(random_formula(rng, atoms, depth - 1));
        return kind(rng) % 2 ? F::conj(std::move(kids)) : F::disj(std::move(kids));
    }
    default: return F::iff(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1));
    }
}

// Defining-equation shaped formula: literal <-> disjunction of negated sets.
F random_equation(std::mt19937_64& rng, std::size_t atoms) {
    std::uniform_int_distribution<AtomId> atom(0, static_cast<AtomId>(atoms - 1));
    std::vector<F> disjuncts;
    for (int k = std::uniform_int_distribution<int>(0, 4)(rng); k > 0; --k)
        disjuncts.push_back(F::neg_set(testing::random_subset(rng, atoms, 4)));
    return F::iff(F::atom(atom(rng)), F::disj(std::move(disjuncts)));
}

std::vector<Interpretation> sweep(const Theory& t) {
    std::vector<Interpretation> out;
    for (const auto& v : testing::all_subsets(t.universe.size())) {
        bool ok = true;
        for (const auto& f : t.formulas) ok = ok && f.evaluate(v);
        if (ok) out.push_back(v);
    }
    sort_models(out);
    return out;
}

} // namespace

TEST_CASE("smart constructors normalize arity") {
    CHECK(F::conj({}) == F::truth());
    CHECK(F::disj({}) == F::falsity());
    CHECK(F::conj({F::atom(3)}) == F::atom(3));
    CHECK(F::neg_set(AtomSet{}) == F::truth());
    CHECK(F::neg_set(AtomSet{1}) == F::neg(1));
    CHECK(F::neg_set(AtomSet{1, 2}) == F::conj({F::neg(1), F::neg(2)}));
    CHECK(F::conj({F::atom(1), F::atom(2)}).kind() == F::Kind::And);
}

TEST_CASE("evaluation") {
    F f = phi_u1();
    CHECK_FALSE(f.evaluate(AtomSet{0, 1, 2}));
    CHECK(f.evaluate(AtomSet{0, 1}));
    CHECK(F::iff(F::atom(0), F::neg(1)).evaluate(AtomSet{0}));
    CHECK_FALSE(F::iff(F::atom(0), F::neg(1)).evaluate(AtomSet{}));
    CHECK(f.atoms() == AtomSet{0, 1, 2, 3, 4, 5});
}

TEST_CASE("formatting in program syntax") {
    Universe u = six();
    CHECK(format_formula(u, phi_u1()) == "(~1 | ~2 | ~3) & (~4 | ~5 | ~6)");
    CHECK(format_formula(u, F::iff(F::atom(0), F::disj({F::neg(1), F::neg_set(AtomSet{1, 2})}))) ==
          "1 <-> ~2 | (~2 & ~3)");
    CHECK(format_formula(u, F::iff(F::atom(0), F::truth())) == "1 <-> true");
    CHECK(format_formula(u, F::iff(F::atom(0), F::falsity())) == "1 <-> false");
}

TEST_CASE("entailment") {
    // ~{q1,q2} entails ~{q1}
    CHECK(entails(F::neg_set(AtomSet{0, 1}), F::neg_set(AtomSet{0})));
    CHECK_FALSE(entails(F::neg_set(AtomSet{0}), F::neg_set(AtomSet{0, 1})));
    CHECK(entails(phi_u1(), phi_u2()));
    CHECK_FALSE(entails(phi_u2(), phi_u1()));
    // Only 4 and 5 false: satisfies the pair formula, falsifies the first conjunct.
    AtomSet witness{0, 1, 2, 5};
    CHECK(phi_u2().evaluate(witness));
    CHECK_FALSE(phi_u1().evaluate(witness));
    CHECK(equivalent(F::disj({F::atom(0), F::neg(0)}), F::truth()));
    CHECK(entails(F::falsity(), F::atom(0)));
}

TEST_CASE("entailment refuses oversized formulas") {
    std::vector<F> lits;
    for (AtomId a = 0; a < 22; ++a) lits.push_back(F::atom(a));
    F big = F::conj(lits);
    CHECK_THROWS_AS(entails(big, big), Error);
    CHECK(entails(big, big, 22));
}

TEST_CASE("models of the example theory") {
    Theory t;
    for (const char* n : {"p", "q", "r", "s", "t"}) t.universe.intern(n);
    t.formulas = {F::iff(F::atom(0), F::truth()), F::iff(F::atom(1), F::neg(2)), F::iff(F::atom(2), F::neg(1)),
                  F::iff(F::atom(3), F::neg(4)), F::iff(F::atom(4), F::falsity())};
    const std::vector<Interpretation> expected{AtomSet{0, 1, 3}, AtomSet{0, 2, 3}};
    CHECK(all_models(t).models == expected);
    CHECK(all_models(t).complete);
    CHECK(all_models_exhaustive(t) == expected);
}

TEST_CASE("degenerate theories") {
    Theory empty;
    CHECK(all_models(empty).models == std::vector<Interpretation>{AtomSet{}});
    Theory contradiction;
    contradiction.universe.intern("p");
    contradiction.formulas = {F::iff(F::atom(0), F::neg(0))};
    CHECK(all_models(contradiction).models.empty());
    Theory free;
    free.universe.intern("a");
    free.universe.intern("b");
    CHECK(all_models(free).models.size() == 4);
}

TEST_CASE("enumeration stops on timeout") {
    Theory t;
    for (int i = 0; i < 24; ++i) t.universe.intern("x" + std::to_string(i));
    EnumerateOptions opts;
    opts.timeout = std::chrono::milliseconds(1);
    ModelList r = all_models(t, opts);
    CHECK_FALSE(r.complete);
    CHECK(r.models.size() < (std::size_t{1} << 24));
}

TEST_CASE("DIMACS export") {
    Theory t;
    t.universe.intern("p");
    t.universe.intern("q");
    t.formulas = {F::iff(F::atom(0), F::neg(1))};
    CnfEncoding cnf = encode_theory(t);
    CHECK(cnf.atom_count == 2);
    std::string text = to_dimacs(cnf);
    CHECK(text.find("p cnf 2 " + std::to_string(cnf.clauses.size())) != std::string::npos);
}

TEST_CASE("property: DPLL agrees with the valuation sweep") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 400; ++i) {
        std::size_t atoms = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        Theory t = {testing::numbered_universe(atoms), {}};
        for (int k = std::uniform_int_distribution<int>(0, 6)(rng); k > 0; --k)
            t.formulas.push_back(i % 2 ? random_formula(rng, atoms, 3) : random_equation(rng, atoms));
        auto expected = sweep(t);
        CHECK(all_models(t).models == expected);
        EnumerateOptions tseitin_only;
        tseitin_only.encode.direct_product_limit = 0;
        CHECK(all_models(t, tseitin_only).models == expected);
        CHECK(all_models_exhaustive(t) == expected);
    }
}

TEST_CASE("property: U1 is a subset of U2 iff ~U2 entails ~U1") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 500; ++i) {
        AtomSet u1 = testing::random_subset(rng, 6, 4);
        AtomSet u2 = testing::random_subset(rng, 6, 4);
        CHECK(u1.subset_of(u2) == entails(F::neg_set(u2), F::neg_set(u1)));
    }
}
