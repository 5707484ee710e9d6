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

#include "lps/atoms.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lps {

/// Normal clause `head <- pos, not neg`. The two bodies may overlap.
struct Clause {
    AtomId head = 0;
    AtomSet pos;
    AtomSet neg;

    bool is_horn() const noexcept { return neg.empty(); }
    friend bool operator==(const Clause&, const Clause&) = default;
};

/// Finite normal propositional program. Clause order is the input order and
/// is preserved by every transformation.
class Program {
public:
    Program() = default;
    Program(Universe universe, std::vector<Clause> clauses);

    const Universe& universe() const noexcept { return universe_; }
    Universe& universe() noexcept { return universe_; }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    std::size_t atom_count() const noexcept { return universe_.size(); }

    /// Appends a clause; every atom must already be interned.
    void add(Clause c);

    bool is_horn() const;

    friend bool operator==(const Program&, const Program&) = default;

private:
    Universe universe_;
    std::vector<Clause> clauses_;
};

/// Parses the textual program format:
///
///     clause := atom [ ":-" lit { "," lit } ] "."
///     lit    := atom | "not" atom
///     decl   := "#atoms" atom { "," atom } "."
///
/// `%` starts a line comment. Atoms listed in `#atoms` come first in the
/// universe (declaration order), the rest follow in first-occurrence order.
Program parse_program(std::string_view text);

std::string format_clause(const Universe& u, const Clause& c);
/// Emits text accepted by parse_program that reproduces the same Program.
std::string format_program(const Program& p);

/// Subprogram of clauses with empty negative body, same universe.
Program horn_part(const Program& p);
bool is_purely_negative(const Program& p);
/// True iff no strongly connected component of the atom dependency graph
/// contains a negative edge.
bool is_stratified(const Program& p);

} // namespace lps
