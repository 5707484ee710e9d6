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

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lps {

/// Propositional formula over atom ids. Negation only occurs on atoms.
///
/// The smart constructors normalize n-ary connectives: zero children become
/// true (conjunction) or false (disjunction), a single child is returned
/// unwrapped. Nested connectives are kept as given.
class Formula {
public:
    enum class Kind { True, False, Atom, NegAtom, And, Or, Iff };

    Formula() : kind_(Kind::True) {}

    static Formula truth() { return Formula(Kind::True); }
    static Formula falsity() { return Formula(Kind::False); }
    static Formula atom(AtomId a);
    static Formula neg(AtomId a);
    static Formula conj(std::vector<Formula> children);
    static Formula disj(std::vector<Formula> children);
    static Formula iff(Formula lhs, Formula rhs);
    /// ¬S = ¬s1 ∧ ... ∧ ¬sn (true for the empty set).
    static Formula neg_set(const AtomSet& s);

    Kind kind() const noexcept { return kind_; }
    AtomId atom_id() const noexcept { return atom_; }
    const std::vector<Formula>& children() const noexcept { return children_; }

    bool is_literal() const noexcept { return kind_ == Kind::Atom || kind_ == Kind::NegAtom; }
    bool is_constant() const noexcept { return kind_ == Kind::True || kind_ == Kind::False; }

    bool evaluate(const Interpretation& v) const;
    AtomSet atoms() const;
    std::size_t hash() const noexcept;

    friend bool operator==(const Formula&, const Formula&) = default;

private:
    explicit Formula(Kind k) : kind_(k) {}
    void collect_atoms(std::vector<AtomId>& out) const;

    Kind kind_;
    AtomId atom_ = 0;
    std::vector<Formula> children_;
};

/// Renders a formula in the extended program syntax
/// (`<->`, `|`, `&`, `~`, `true`, `false`).
std::string format_formula(const Universe& u, const Formula& f);

/// Ordered list of formulas over a universe.
struct Theory {
    Universe universe;
    std::vector<Formula> formulas;
};

inline constexpr std::size_t kDefaultEntailmentLimit = 20;
inline constexpr std::size_t kDefaultExhaustiveLimit = 24;

/// Every valuation over the atoms of f and g that satisfies f satisfies g.
/// Throws Error(TooManyAtoms) when the combined atom count exceeds `limit`.
bool entails(const Formula& f, const Formula& g, std::size_t limit = kDefaultEntailmentLimit);
bool equivalent(const Formula& f, const Formula& g, std::size_t limit = kDefaultEntailmentLimit);

// --- clausal translation ---------------------------------------------------

/// DIMACS-style literal: +v / -v with 1-based variable v. Variables
/// 1..atom_count are the theory atoms; the rest are auxiliaries.
using Lit = int;

struct CnfEncoding {
    std::size_t atom_count = 0;
    std::size_t var_count = 0;
    std::vector<std::vector<Lit>> clauses;
    /// aux_names[i] describes variable atom_count + 1 + i.
    std::vector<std::string> aux_names;
};

struct EncodeOptions {
    /// A defining equation `p <-> (c1 | ... | ck)` with conjunctions c_j is
    /// encoded without auxiliaries when the product of the conjunction widths
    /// does not exceed this bound.
    std::size_t direct_product_limit = 16;
};

CnfEncoding encode_theory(const Theory& t, const EncodeOptions& opts = {});
std::string to_dimacs(const CnfEncoding& cnf);

// --- model enumeration -----------------------------------------------------

struct EnumerateOptions {
    std::optional<std::chrono::milliseconds> timeout;
    EncodeOptions encode;
};

struct ModelList {
    std::vector<Interpretation> models;
    /// False when the enumeration stopped on timeout; models is then partial.
    bool complete = true;
};

/// All models of the theory restricted to its universe, duplicate free and
/// sorted. DPLL with unit propagation and chronological backtracking; branch
/// on the lowest unassigned variable, false first.
ModelList all_models(const Theory& t, const EnumerateOptions& opts = {});

/// Same contract by sweeping all 2^n valuations.
/// Throws Error(TooManyAtoms) above `limit` atoms.
std::vector<Interpretation> all_models_exhaustive(const Theory& t,
                                                  std::size_t limit = kDefaultExhaustiveLimit);

/// Backtracking enumerator over a clause set. One engine per theory; not
/// thread-safe, independent engines may run concurrently.
class ModelEnumerator {
public:
    explicit ModelEnumerator(const CnfEncoding& cnf);

    /// Enumerates models projected onto the first atom_count variables.
    ModelList run(std::optional<std::chrono::milliseconds> timeout = std::nullopt);

private:
    bool enqueue(Lit l);
    bool propagate();
    bool backtrack();
    Lit value(Lit l) const;

    std::size_t atoms_;
    std::size_t vars_;
    std::vector<std::vector<Lit>> clauses_;
    std::vector<std::vector<std::size_t>> watches_;
    std::vector<signed char> assign_;
    std::vector<Lit> trail_;
    std::size_t qhead_ = 0;
    struct Decision {
        std::size_t trail_pos;
        Lit lit;
        bool flipped;
    };
    std::vector<Decision> decisions_;
    bool trivially_unsat_ = false;
    std::vector<Lit> units_;
};

} // namespace lps
