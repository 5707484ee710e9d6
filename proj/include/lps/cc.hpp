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

#include "lps/formula.hpp"
#include "lps/program.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lps {

/// Cardinality constraint `l X u`; an absent bound is vacuous.
struct CardConstraint {
    std::optional<std::uint32_t> lower;
    AtomSet atoms;
    std::optional<std::uint32_t> upper;
    friend bool operator==(const CardConstraint&, const CardConstraint&) = default;
};

/// `l X` half of a constraint.
struct LowerConstraint {
    std::uint32_t bound = 0;
    AtomSet atoms;
    friend bool operator==(const LowerConstraint&, const LowerConstraint&) = default;
    friend auto operator<=>(const LowerConstraint&, const LowerConstraint&) = default;
};

/// `X u` half of a constraint. Ordered by atom set, then bound.
struct UpperConstraint {
    AtomSet atoms;
    std::uint32_t bound = 0;
    friend bool operator==(const UpperConstraint&, const UpperConstraint&) = default;
    friend auto operator<=>(const UpperConstraint&, const UpperConstraint&) = default;
};

/// Rule as written: single-atom head, body of cardinality constraints.
struct CCRule {
    AtomId head = 0;
    std::vector<CardConstraint> body;
    friend bool operator==(const CCRule&, const CCRule&) = default;
};

/// Rule after splitting every `l X u` into `l X` and `X u`.
struct CCClause {
    AtomId head = 0;
    std::vector<LowerConstraint> lowers;
    std::vector<UpperConstraint> uppers;

    bool is_horn() const noexcept { return uppers.empty(); }
    friend bool operator==(const CCClause&, const CCClause&) = default;
};

/// Sorted, duplicate-free set of upper constraints.
class CCSupport {
public:
    CCSupport() = default;
    explicit CCSupport(std::vector<UpperConstraint> items);

    const std::vector<UpperConstraint>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    CCSupport unite(const CCSupport& other) const;
    /// M satisfies every member.
    bool admitted_by(const Interpretation& m) const;

    friend bool operator==(const CCSupport&, const CCSupport&) = default;
    friend auto operator<=>(const CCSupport&, const CCSupport&) = default;

private:
    std::vector<UpperConstraint> items_;
};

class CCProgram {
public:
    CCProgram() = default;
    CCProgram(Universe universe, std::vector<CCRule> rules);

    const Universe& universe() const noexcept { return universe_; }
    const std::vector<CCRule>& rules() const noexcept { return rules_; }
    std::size_t atom_count() const noexcept { return universe_.size(); }
    /// Transformed clauses, one per rule, same order.
    std::vector<CCClause> clauses() const;

private:
    Universe universe_;
    std::vector<CCRule> rules_;
};

/// Transformed CC program (lowers only after a reduct).
struct CCHornProgram {
    Universe universe;
    std::vector<CCClause> clauses;
};

/// Parses `p :- 1 {q; r} 1, s, not t.` Plain atoms stand for `1 {a}` and
/// `not a` for `{a} 0`. Bound 0 lowers and uppers with u >= |X| are dropped.
/// Throws ParseError, or ParseError with CompoundHead for a constraint head.
CCProgram cc_parse(std::string_view text);
std::string format_constraint(const Universe& u, const CardConstraint& c);
std::string format_upper(const Universe& u, const UpperConstraint& c);
std::string format_cc_clause(const Universe& u, const CCClause& c);
std::string format_cc_program(const CCProgram& p);

/// l <= |M ∩ X| <= u, absent bounds vacuous.
bool cc_satisfies(const Interpretation& m, const CardConstraint& c);
CCClause cc_transform(const CCRule& r);

/// { p : some clause with |X_i ∩ M| >= l_i for all lowers }.
/// Throws Error(NotCCHorn) if a clause has upper constraints.
Interpretation cc_tp_step(const std::vector<CCClause>& horn, const Interpretation& m);
Interpretation cc_least_model(const std::vector<CCClause>& horn);

/// Drops clauses with a violated upper constraint, erases the rest.
CCHornProgram nss_reduct(const CCProgram& p, const Interpretation& m);
Interpretation ccgl(const CCProgram& p, const Interpretation& m);
bool is_cc_stable(const CCProgram& p, const Interpretation& m);
std::vector<Interpretation> cc_stable_models_bruteforce(const CCProgram& p, std::size_t limit = 20);

/// AND over members of OR over |X|-u subsets W of X of ~W.
Formula cc_support_formula(const CCSupport& u);
/// u ⪯ v iff cc_support_formula(v) entails cc_support_formula(u).
bool cc_support_preceq(const CCSupport& u, const CCSupport& v,
                       std::size_t limit = kDefaultEntailmentLimit);

using CCSupportFamily = std::vector<std::vector<CCSupport>>;

/// ⪯-minimal supports per atom, one canonical member per equivalence class
/// (fewest constraints, then smallest in constraint order).
CCSupportFamily cc_minimal_supports(const CCProgram& p, std::size_t cap = 100000);
std::vector<CCSupport> cc_minimal_supports(const CCProgram& p, AtomId target, std::size_t cap = 100000);
/// Supports of every CC proof scheme, padding included.
CCSupportFamily cc_all_supports(const CCProgram& p, std::size_t cap = 100000);

struct CCTheoryBuild {
    Theory theory;
    std::vector<std::string> warnings;
};

CCTheoryBuild cc_build_theory(const CCProgram& p, bool reduced, std::size_t cap = 100000);
Theory cc_theory(const CCProgram& p, bool reduced);
std::vector<Interpretation> cc_stable_models_via_equations(const CCProgram& p, bool reduced,
                                                           const EnumerateOptions& opts = {});

Interpretation cc_gl_via_schemes(const CCSupportFamily& minimal, const Interpretation& m);
Interpretation cc_gl_via_schemes(const CCProgram& p, const Interpretation& m);

/// Normal program rewritten with `1 {a}` for atoms and `{a} 0` for negations.
CCProgram embed_normal_program(const Program& p);

} // namespace lps
