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

#include "lps/program.hpp"

#include <cstddef>
#include <vector>

namespace lps {

/// A conditional derivation: each step applies a clause (by index into the
/// program) whose positive body was derived by earlier steps. The support is
/// the union of the negative bodies used.
struct ProofScheme {
    struct Step {
        std::size_t clause;
        AtomId derived;
        friend bool operator==(const Step&, const Step&) = default;
    };
    std::vector<Step> steps;
    AtomSet support;

    AtomId conclusion() const { return steps.back().derived; }
    std::size_t length() const noexcept { return steps.size(); }
    friend bool operator==(const ProofScheme&, const ProofScheme&) = default;
};

bool validate_scheme(const Program& p, const ProofScheme& s);
/// M admits S iff M ∩ supp(S) = ∅.
bool admits(const Interpretation& m, const ProofScheme& s);

/// All irredundant schemes for `target` of length ≤ max_steps. Irredundant:
/// no atom is derived twice and every step feeds the conclusion. Each scheme
/// is emitted once, linearized by always taking the ready step with the
/// smallest clause index. Ordered by length, then clause-index sequence.
std::vector<ProofScheme> enumerate_schemes(const Program& p, AtomId target, std::size_t max_steps);

inline constexpr std::size_t kDefaultSupportCap = 100000;

/// Supports per atom, each list ordered by support_precedes.
using SupportFamily = std::vector<std::vector<AtomSet>>;

/// Supports of derivation trees: clauses with empty positive body seed their
/// negative body; a clause combines one support per positive body atom with
/// its own negative body. These are the supports of schemes without padding.
SupportFamily derivation_supports(const Program& p, std::size_t cap = kDefaultSupportCap);

/// Supports of every scheme, padding steps included: a derivation support of
/// the atom united with any union of derivation supports of derivable atoms.
/// Throws Error(SupportExplosion) when an atom exceeds `cap` supports.
SupportFamily all_supports(const Program& p, std::size_t cap = kDefaultSupportCap);
std::vector<AtomSet> all_supports(const Program& p, AtomId target, std::size_t cap = kDefaultSupportCap);

/// Inclusion-minimal supports, saturated with subsumption pruning.
SupportFamily minimal_supports(const Program& p, std::size_t cap = kDefaultSupportCap);
std::vector<AtomSet> minimal_supports(const Program& p, AtomId target,
                                      std::size_t cap = kDefaultSupportCap);

/// { p : some minimal support of p is disjoint from M }.
Interpretation gl_via_schemes(const Program& p, const Interpretation& m);
Interpretation gl_via_schemes(const SupportFamily& minimal, const Interpretation& m);

/// Stable-model test through supports: every atom of M has an admitted
/// support and no atom outside M has one.
bool is_stable_via_schemes(const SupportFamily& minimal, const Interpretation& m);

/// Subsets M of the universe passing is_stable_via_schemes, sorted.
std::vector<Interpretation> stable_models_via_schemes(const Program& p, std::size_t limit);

/// Keeps the inclusion-minimal members (duplicates collapse).
std::vector<AtomSet> minimize_antichain(std::vector<AtomSet> sets);

} // namespace lps
