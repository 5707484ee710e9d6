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

// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include "lps/cc.hpp"
#include "lps/equations.hpp"
#include "lps/error.hpp"
#include "lps/fixpoint.hpp"
#include "lps/lps.h"
#include "lps/oplab.hpp"
#include "lps/schemes.hpp"
#include "testing.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace lps;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
    auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (time_limit_s > 0 && secs >= time_limit_s) {
        o.pass = false;
        o.detail += " (time limit " + std::to_string(time_limit_s) + " s exceeded)";
    }
    if (!o.pass) ++failures;
    std::printf("[%2d] %-4s %s: %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::vector<Program> corpus(std::uint64_t seed, std::size_t count, const testing::ProgramShape& shape) {
    std::mt19937_64 rng(seed);
    std::vector<Program> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(testing::random_program(rng, shape));
    return out;
}

const testing::ProgramShape kMainShape{8, 16, 3};

Outcome example_fixture() {
    const char* text = "p. q :- p, not r. r :- not q. s :- not t.";
    const std::string expected = "{\"models\":[[\"p\",\"q\",\"s\"],[\"p\",\"r\",\"s\"]]}\n";
    lps_program* prog = nullptr;
    if (lps_program_parse(text, &prog) != LPS_OK) return {false, lps_last_error()};
    lps_options* opts = lps_options_new();
    std::string detail;
    bool ok = true;
    const std::pair<lps_method, const char*> methods[] = {
        {LPS_METHOD_BRUTEFORCE, "bruteforce"}, {LPS_METHOD_EQUATIONS, "equations"}, {LPS_METHOD_SCHEMES, "schemes"}};
    for (auto [m, name] : methods) {
        lps_output* out = nullptr;
        lps_status s = lps_solve(prog, opts, m, &out);
        bool good = s == LPS_OK && out && expected == lps_output_text(out);
        ok = ok && good;
        detail += std::string(detail.empty() ? "" : ", ") + name + (good ? " ok" : " wrong");
        lps_output_free(out);
    }
    lps_options_free(opts);
    lps_program_free(prog);
    return {ok, detail};
}

Outcome gl_equivalence() {
    std::size_t checks = 0;
    std::size_t mismatches = 0;
    for (const auto& p : corpus(1001, 500, kMainShape)) {
        SupportFamily minimal = minimal_supports(p);
        for (const auto& m : testing::all_subsets(p.atom_count())) {
            ++checks;
            if (gl_via_schemes(minimal, m) != gl_operator(p, m)) ++mismatches;
        }
    }
    return {mismatches == 0,
            std::to_string(checks) + " (program, M) pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome equation_models() {
    std::size_t reduced_bad = 0;
    std::size_t full_bad = 0;
    std::size_t full_checked = 0;
    std::size_t explosions = 0;
    for (const auto& p : corpus(1001, 500, kMainShape)) {
        auto brute = stable_models_bruteforce(p);
        auto reduced = stable_models_via_equations(p, true);
        if (reduced != brute) ++reduced_bad;
        try {
            auto full = stable_models_via_equations(p, false);
            ++full_checked;
            if (full != reduced) ++full_bad;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SupportExplosion) throw;
            ++explosions;
        }
    }
    return {reduced_bad == 0 && full_bad == 0,
            "500 programs, reduced mismatches " + std::to_string(reduced_bad) + ", full theories compared " +
                std::to_string(full_checked) + " with " + std::to_string(full_bad) + " mismatches, " +
                std::to_string(explosions) + " support explosions"};
}

Outcome antimonotonicity() {
    std::size_t pairs = 0;
    std::size_t violations = 0;
    for (const auto& p : corpus(2002, 200, {6, 12, 3})) {
        auto subsets = testing::all_subsets(p.atom_count());
        std::vector<AtomSet> gl;
        for (const auto& m : subsets) gl.push_back(gl_operator(p, m));
        for (std::size_t x = 0; x < subsets.size(); ++x) {
            for (std::size_t y = 0; y < subsets.size(); ++y) {
                if ((x & y) != x) continue;
                ++pairs;
                if (!gl[y].subset_of(gl[x])) ++violations;
            }
        }
    }
    return {violations == 0, std::to_string(pairs) + " subset pairs, " + std::to_string(violations) + " violations"};
}

Outcome realization() {
    auto tables = all_antimonotone_tables(3);
    std::size_t bad = 0;
    for (const auto& f : tables) {
        if (verify_operator_realization(f)) ++bad;
    }
    return {tables.size() == 8000 && bad == 0,
            std::to_string(tables.size()) + " tables, " + std::to_string(bad) + " failures"};
}

Outcome fsp_probes() {
    FspProbe e2 = fsp_growth_probe(Family::E2, 6);
    FspProbe ex3 = fsp_growth_probe(Family::Ex3, 6);
    bool ok = e2.tag == "growing" && ex3.tag == "bounded";
    std::string e2s;
    std::string ex3s;
    for (std::size_t n = 1; n <= 6; ++n) {
        ok = ok && e2.counts[n - 1] == std::pair<std::size_t, std::size_t>{n, n};
        ok = ok && ex3.counts[n - 1] == std::pair<std::size_t, std::size_t>{n, 1};
        e2s += (n > 1 ? "," : "") + std::to_string(e2.counts[n - 1].second);
        ex3s += (n > 1 ? "," : "") + std::to_string(ex3.counts[n - 1].second);
        Program fam = family_program(Family::Ex3, n);
        const AtomId p = fam.universe().at("p");
        const AtomId p1 = fam.universe().at("p1");
        ok = ok && defining_equation(fam, p, true).formula() == Formula::iff(Formula::atom(p), Formula::neg(p1));
    }
    Program fam = family_program(Family::Ex3, 6);
    std::string eq = format_formula(fam.universe(), defining_equation(fam, 0, true).formula());
    return {ok, "e2 counts " + e2s + " (" + e2.tag + "), ex3 counts " + ex3s + " (" + ex3.tag + "), equation " + eq};
}

Outcome worked_entailment() {
    using F = Formula;
    CCSupport u1({{AtomSet{0, 1, 2}, 2}, {AtomSet{3, 4, 5}, 2}});
    CCSupport u2({{AtomSet{0, 1, 2, 3, 4, 5}, 4}});
    F phi1 = F::conj({F::disj({F::neg(0), F::neg(1), F::neg(2)}), F::disj({F::neg(3), F::neg(4), F::neg(5)})});
    std::vector<F> pairs;
    for (AtomId i = 0; i < 6; ++i)
        for (AtomId j = i + 1; j < 6; ++j) pairs.push_back(F::conj({F::neg(i), F::neg(j)}));
    F phi2 = F::disj(pairs);
    bool ast1 = cc_support_formula(u1) == phi1;
    bool ast2 = cc_support_formula(u2) == phi2;
    bool fwd = entails(cc_support_formula(u1), cc_support_formula(u2));
    bool back = entails(cc_support_formula(u2), cc_support_formula(u1));
    bool order = cc_support_preceq(u2, u1) && !cc_support_preceq(u1, u2);
    return {ast1 && ast2 && fwd && !back && order,
            std::string("formulas ") + (ast1 && ast2 ? "match" : "differ") + ", phi1 |= phi2 " +
                (fwd ? "true" : "false") + ", phi2 |= phi1 " + (back ? "true" : "false")};
}

Outcome cc_oracle() {
    std::mt19937_64 rng(3003);
    std::size_t model_bad = 0;
    std::size_t anti_bad = 0;
    std::size_t gl_bad = 0;
    for (int i = 0; i < 300; ++i) {
        CCProgram p = testing::random_cc_program(rng, {6, 6, 2, 4});
        auto subsets = testing::all_subsets(p.atom_count());
        std::vector<AtomSet> g;
        std::vector<Interpretation> fixpoints;
        for (const auto& m : subsets) {
            g.push_back(ccgl(p, m));
            if (g.back() == m) fixpoints.push_back(m);
        }
        sort_models(fixpoints);
        if (cc_stable_models_via_equations(p, true) != fixpoints) ++model_bad;
        if (cc_stable_models_bruteforce(p) != fixpoints) ++model_bad;
        CCSupportFamily minimal = cc_minimal_supports(p);
        for (std::size_t x = 0; x < subsets.size(); ++x) {
            if (cc_gl_via_schemes(minimal, subsets[x]) != g[x]) ++gl_bad;
            if (testing::naive_ccgl(p, subsets[x]) != g[x]) ++gl_bad;
            for (std::size_t y = 0; y < subsets.size(); ++y) {
                if ((x & y) == x && !g[y].subset_of(g[x])) ++anti_bad;
            }
        }
    }
    return {model_bad + anti_bad + gl_bad == 0, "300 programs, model mismatches " + std::to_string(model_bad) +
                                                    ", antimonotonicity violations " + std::to_string(anti_bad) +
                                                    ", GL mismatches " + std::to_string(gl_bad)};
}

Outcome embedding() {
    std::size_t bad = 0;
    for (const auto& p : corpus(4004, 200, {6, 10, 3})) {
        CCProgram cc = embed_normal_program(p);
        auto normal = stable_models_via_equations(p, true);
        if (cc_stable_models_via_equations(cc, true) != normal) ++bad;
        if (cc_stable_models_bruteforce(cc) != stable_models_bruteforce(p)) ++bad;
    }
    return {bad == 0, "200 programs, " + std::to_string(bad) + " mismatches"};
}

Outcome completion() {
    std::size_t bad = 0;
    for (const auto& p : corpus(5005, 200, {8, 12, 3, false, true})) {
        if (all_models(clark_completion_purely_negative(p)).models != all_models(theory(p, true)).models) ++bad;
    }
    return {bad == 0, "200 programs, " + std::to_string(bad) + " mismatches"};
}

} // namespace

int main() {
    criterion(1, "example program, three methods", 1.0, example_fixture);
    criterion(2, "GL through minimal supports", 60.0, gl_equivalence);
    criterion(3, "defining-equation models", 0, equation_models);
    criterion(4, "GL antimonotonicity", 0, antimonotonicity);
    criterion(5, "antimonotone table realization", 0, realization);
    criterion(6, "support growth probes", 0, fsp_probes);
    criterion(7, "support formula entailment", 0, worked_entailment);
    criterion(8, "cardinality-constraint oracles", 0, cc_oracle);
    criterion(9, "normal-to-CC embedding", 0, embedding);
    criterion(10, "completion of purely negative programs", 0, completion);
    std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
    return failures == 0 ? 0 : 1;
}
