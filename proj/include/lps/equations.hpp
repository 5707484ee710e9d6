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
#include "lps/schemes.hpp"

#include <string>
#include <vector>

namespace lps {

/// Strict total order on finite atom sets: smaller maximum first, then
/// smaller size, then lexicographic. Throws Error(EqualSets) if u == v.
bool support_precedes(const AtomSet& u, const AtomSet& v);

/// Non-throwing comparator form of support_precedes (false on equal sets).
struct SupportLess {
    bool operator()(const AtomSet& u, const AtomSet& v) const;
};

/// p <-> (~U1 | ~U2 | ...), disjuncts in support order.
struct DefiningEquation {
    AtomId atom = 0;
    Formula rhs;
    bool reduced = false;

    Formula formula() const { return Formula::iff(Formula::atom(atom), rhs); }
};

/// Builds the right-hand side from a support list: false when empty, true
/// when any support is empty, else the disjunction of negated sets.
Formula equation_rhs(std::vector<AtomSet> supports);

DefiningEquation defining_equation(const Program& p, AtomId atom, bool reduced);

struct TheoryBuild {
    Theory theory;
    std::vector<std::string> warnings;
};

inline constexpr std::size_t kSupportWarnThreshold = 1000;

/// One equation per universe atom, in atom order. The full (non-reduced)
/// form warns for atoms above kSupportWarnThreshold supports.
TheoryBuild build_theory(const Program& p, bool reduced, std::size_t cap = kDefaultSupportCap);
Theory theory(const Program& p, bool reduced);

std::vector<Interpretation> stable_models_via_equations(const Program& p, bool reduced,
                                                        const EnumerateOptions& opts = {});

/// Clark completion of a purely negative program.
/// Throws Error(NotPurelyNegative).
Theory clark_completion_purely_negative(const Program& p);

/// Number of inclusion-minimal supports per atom.
std::vector<std::size_t> fsp_report(const Program& p);

} // namespace lps
