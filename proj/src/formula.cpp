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

#include "lps/formula.hpp"

#include "lps/error.hpp"

#include <algorithm>
#include <sstream>

namespace lps {

Formula Formula::atom(AtomId a) {
    Formula f(Kind::Atom);
    f.atom_ = a;
    return f;
}

Formula Formula::neg(AtomId a) {
    Formula f(Kind::NegAtom);
    f.atom_ = a;
    return f;
}

Formula Formula::conj(std::vector<Formula> children) {
    if (children.empty()) return truth();
    if (children.size() == 1) return std::move(children.front());
    Formula f(Kind::And);
    f.children_ = std::move(children);
    return f;
}

Formula Formula::disj(std::vector<Formula> children) {
    if (children.empty()) return falsity();
    if (children.size() == 1) return std::move(children.front());
    Formula f(Kind::Or);
    f.children_ = std::move(children);
    return f;
}

Formula Formula::iff(Formula lhs, Formula rhs) {
    Formula f(Kind::Iff);
    f.children_.push_back(std::move(lhs));
    f.children_.push_back(std::move(rhs));
    return f;
}

Formula Formula::neg_set(const AtomSet& s) {
    std::vector<Formula> lits;
    lits.reserve(s.size());
    for (AtomId a : s) lits.push_back(neg(a));
    return conj(std::move(lits));
}

bool Formula::evaluate(const Interpretation& v) const {
    switch (kind_) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return v.contains(atom_);
    case Kind::NegAtom: return !v.contains(atom_);
    case Kind::And:
        return std::all_of(children_.begin(), children_.end(), [&](const Formula& c) { return c.evaluate(v); });
    case Kind::Or:
        return std::any_of(children_.begin(), children_.end(), [&](const Formula& c) { return c.evaluate(v); });
    case Kind::Iff: return children_[0].evaluate(v) == children_[1].evaluate(v);
    }
    return false;
}

void Formula::collect_atoms(std::vector<AtomId>& out) const {
    if (is_literal()) out.push_back(atom_);
    for (const auto& c : children_) c.collect_atoms(out);
}

AtomSet Formula::atoms() const {
    std::vector<AtomId> ids;
    collect_atoms(ids);
    return AtomSet(std::move(ids));
}

std::size_t Formula::hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(kind_) * 0x100000001b3ull + atom_;
    for (const auto& c : children_) h ^= c.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

namespace {

void format_into(const Universe& u, const Formula& f, std::ostream& os, bool nested) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::True: os << "true"; return;
    case K::False: os << "false"; return;
    case K::Atom: os << u.name(f.atom_id()); return;
    case K::NegAtom: os << '~' << u.name(f.atom_id()); return;
    case K::And:
    case K::Or:
    case K::Iff: break;
    }
    const char* sep = f.kind() == K::And ? " & " : f.kind() == K::Or ? " | " : " <-> ";
    if (nested) os << '(';
    bool first = true;
    for (const auto& c : f.children()) {
        if (!first) os << sep;
        first = false;
        bool child_nested = !c.is_literal() && !c.is_constant() &&
                            (f.kind() != K::Iff || c.kind() == K::Iff);
        format_into(u, c, os, child_nested);
    }
    if (nested) os << ')';
}

// Evaluates f on a valuation packed into a bit mask; bit_of maps atom ids.
bool eval_mask(const Formula& f, const std::vector<int>& bit_of, std::uint64_t mask) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: return (mask >> bit_of[f.atom_id()]) & 1u;
    case K::NegAtom: return !((mask >> bit_of[f.atom_id()]) & 1u);
    case K::And:
        for (const auto& c : f.children()) {
            if (!eval_mask(c, bit_of, mask)) return false;
        }
        return true;
    case K::Or:
        for (const auto& c : f.children()) {
            if (eval_mask(c, bit_of, mask)) return true;
        }
        return false;
    case K::Iff:
        return eval_mask(f.children()[0], bit_of, mask) == eval_mask(f.children()[1], bit_of, mask);
    }
    return false;
}

std::vector<int> bit_map(const AtomSet& atoms) {
    std::vector<int> bit_of(atoms.empty() ? 0 : atoms.max() + 1, -1);
    int i = 0;
    for (AtomId a : atoms) bit_of[a] = i++;
    return bit_of;
}

} // namespace

std::string format_formula(const Universe& u, const Formula& f) {
    std::ostringstream os;
    format_into(u, f, os, false);
    return os.str();
}

bool entails(const Formula& f, const Formula& g, std::size_t limit) {
    AtomSet atoms = f.atoms().unite(g.atoms());
    if (atoms.size() > limit || atoms.size() >= 63) {
        throw Error(ErrorCode::TooManyAtoms, "entailment check over " + std::to_string(atoms.size()) +
                                                 " atoms exceeds the limit of " + std::to_string(limit));
    }
    auto bit_of = bit_map(atoms);
    const std::uint64_t n = std::uint64_t{1} << atoms.size();
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        if (eval_mask(f, bit_of, mask) && !eval_mask(g, bit_of, mask)) return false;
    }
    return true;
}

bool equivalent(const Formula& f, const Formula& g, std::size_t limit) {
    return entails(f, g, limit) && entails(g, f, limit);
}

std::vector<Interpretation> all_models_exhaustive(const Theory& t, std::size_t limit) {
    const std::size_t n = t.universe.size();
    if (n > limit || n >= 63) {
        throw Error(ErrorCode::TooManyAtoms, "exhaustive enumeration over " + std::to_string(n) +
                                                 " atoms exceeds the limit of " + std::to_string(limit));
    }
    std::vector<int> bit_of(n);
    for (std::size_t i = 0; i < n; ++i) bit_of[i] = static_cast<int>(i);
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = std::all_of(t.formulas.begin(), t.formulas.end(),
                              [&](const Formula& f) { return eval_mask(f, bit_of, mask); });
        if (ok) out.push_back(AtomSet::from_mask(mask));
    }
    sort_models(out);
    return out;
}

} // namespace lps
