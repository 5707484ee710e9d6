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

#include <algorithm>
#include <string>

namespace lps {

bool support_precedes(const AtomSet& u, const AtomSet& v) {
    if (u == v) throw Error(ErrorCode::EqualSets, "support order is strict: sets are equal");
    return SupportLess{}(u, v);
}

bool SupportLess::operator()(const AtomSet& u, const AtomSet& v) const {
    // The empty set has no maximum; it precedes every other set.
    if (u.empty() || v.empty()) return u.empty() && !v.empty();
    if (u.max() != v.max()) return u.max() < v.max();
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
}

Formula equation_rhs(std::vector<AtomSet> supports) {
    if (supports.empty()) return Formula::falsity();
    std::sort(supports.begin(), supports.end(), SupportLess{});
    if (supports.front().empty()) return Formula::truth();
    std::vector<Formula> disjuncts;
    disjuncts.reserve(supports.size());
    for (const auto& s : supports) disjuncts.push_back(Formula::neg_set(s));
    return Formula::disj(std::move(disjuncts));
}

DefiningEquation defining_equation(const Program& p, AtomId atom, bool reduced) {
    auto supports = reduced ? minimal_supports(p, atom) : all_supports(p, atom);
    return DefiningEquation{atom, equation_rhs(std::move(supports)), reduced};
}

TheoryBuild build_theory(const Program& p, bool reduced, std::size_t cap) {
    TheoryBuild out;
    out.theory.universe = p.universe();
    SupportFamily fam = reduced ? minimal_supports(p, cap) : all_supports(p, cap);
    for (AtomId a = 0; a < p.atom_count(); ++a) {
        if (!reduced && fam[a].size() > kSupportWarnThreshold) {
            out.warnings.push_back("atom '" + p.universe().name(a) + "' has " + std::to_string(fam[a].size()) +
                                   " supports in the full defining equation");
        }
        out.theory.formulas.push_back(
            DefiningEquation{a, equation_rhs(std::move(fam[a])), reduced}.formula());
    }
    return out;
}

Theory theory(const Program& p, bool reduced) { return build_theory(p, reduced).theory; }

std::vector<Interpretation> stable_models_via_equations(const Program& p, bool reduced,
                                                        const EnumerateOptions& opts) {
    ModelList r = all_models(theory(p, reduced), opts);
    if (!r.complete) throw Error(ErrorCode::Timeout, "model enumeration timed out");
    return std::move(r.models);
}

Theory clark_completion_purely_negative(const Program& p) {
    for (std::size_t i = 0; i < p.clauses().size(); ++i) {
        if (!p.clauses()[i].pos.empty()) {
            throw Error(ErrorCode::NotPurelyNegative,
                        "clause " + std::to_string(i + 1) + " '" + format_clause(p.universe(), p.clauses()[i]) +
                            "' has a positive body");
        }
    }
    Theory t;
    t.universe = p.universe();
    for (AtomId a = 0; a < p.atom_count(); ++a) {
        std::vector<Formula> bodies;
        for (const auto& c : p.clauses()) {
            if (c.head == a) bodies.push_back(Formula::neg_set(c.neg));
        }
        t.formulas.push_back(Formula::iff(Formula::atom(a), Formula::disj(std::move(bodies))));
    }
    return t;
}

std::vector<std::size_t> fsp_report(const Program& p) {
    SupportFamily fam = minimal_supports(p);
    std::vector<std::size_t> counts;
    counts.reserve(fam.size());
    for (const auto& f : fam) counts.push_back(f.size());
    return counts;
}

} // namespace lps
