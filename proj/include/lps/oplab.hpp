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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace lps {

inline constexpr std::size_t kMaxTableAtoms = 5;

/// Explicit operator on the subsets of a small universe. Subsets are bit
/// masks over atom ids; entry i is the image of subset i.
class OperatorTable {
public:
    using Mask = std::uint32_t;

    OperatorTable(Universe universe, std::vector<Mask> entries);
    static OperatorTable constant(Universe universe, Mask value);
    static OperatorTable from_function(Universe universe, const std::function<Mask(Mask)>& f);

    const Universe& universe() const noexcept { return universe_; }
    std::size_t atom_count() const noexcept { return universe_.size(); }
    Mask full() const noexcept { return static_cast<Mask>((1u << universe_.size()) - 1); }
    Mask operator()(Mask x) const { return entries_.at(x); }
    const std::vector<Mask>& entries() const noexcept { return entries_; }

    friend bool operator==(const OperatorTable&, const OperatorTable&) = default;

private:
    Universe universe_;
    std::vector<Mask> entries_;
};

/// X ⊆ Y with f(Y) ⊄ f(X).
struct MonotonicityWitness {
    OperatorTable::Mask smaller;
    OperatorTable::Mask larger;
};

/// Empty when antimonotone; otherwise the first violating pair.
std::optional<MonotonicityWitness> check_antimonotone(const OperatorTable& f);
std::optional<MonotonicityWitness> check_monotone(const OperatorTable& f);

/// f^d(X) = At \ f(At \ X).
OperatorTable dual_operator(const OperatorTable& f);

/// GL_P as a table. Throws Error(TooManyAtoms) above kMaxTableAtoms.
OperatorTable gl_table(const Program& p);
/// T_P of a Horn program as a table.
OperatorTable tp_table(const Program& horn);

/// For each Q (mask order) and p ∈ f(At \ Q): clause p <- not Q.
/// Throws Error(NotAntimonotone) naming the witness.
Program program_from_operator(const OperatorTable& f);

/// Empty when GL of program_from_operator(f) equals f everywhere;
/// otherwise the first subset where they differ.
std::optional<OperatorTable::Mask> verify_operator_realization(const OperatorTable& f);

/// Every antimonotone table over `atoms` atoms (≤ 3), in lexicographic
/// order of the entry vector.
std::vector<OperatorTable> all_antimonotone_tables(std::size_t atoms);
/// Random antimonotone table: starts from the constant-At table and removes
/// an atom from the images of an up-set of inputs, `rounds` times.
OperatorTable random_antimonotone_table(std::size_t atoms, std::mt19937_64& rng, std::size_t rounds);

/// GL_P(∩ chain) == ∪ GL_P(chain). Throws Error(NotDecreasing).
bool check_lower_half_continuity(const Program& p, const std::vector<Interpretation>& chain);

enum class Family { E2, Ex3 };

/// e2: p <- not p_i for i = 1..n. ex3: p <- not p_1, ..., not p_i for i = 1..n.
/// Universe {p, p1, ..., pn}. Throws Error(InvalidArgument) for n = 0.
Program family_program(Family fam, std::size_t n);
std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family fam);

struct FspProbe {
    std::vector<std::pair<std::size_t, std::size_t>> counts;
    /// "growing" when the last count exceeds the first, else "bounded".
    std::string tag;
};

FspProbe fsp_growth_probe(Family fam, std::size_t n_max);

} // namespace lps
