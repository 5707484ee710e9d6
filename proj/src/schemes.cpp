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

#include "lps/schemes.hpp"

#include "lps/equations.hpp"
#include "lps/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace lps {

bool validate_scheme(const Program& p, const ProofScheme& s) {
    if (s.steps.empty()) return false;
    AtomSet derived;
    AtomSet support;
    for (const auto& step : s.steps) {
        if (step.clause >= p.clauses().size()) return false;
        const Clause& c = p.clauses()[step.clause];
        if (c.head != step.derived) return false;
        if (!c.pos.subset_of(derived)) return false;
        derived.insert(step.derived);
        support = support.unite(c.neg);
    }
    return support == s.support;
}

bool admits(const Interpretation& m, const ProofScheme& s) { return !m.intersects(s.support); }

namespace {

class SchemeSearch {
public:
    SchemeSearch(const Program& p, std::size_t max_steps) : p_(p), max_steps_(max_steps) {
        by_head_.resize(p.atom_count());
        for (std::size_t i = 0; i < p.clauses().size(); ++i) by_head_[p.clauses()[i].head].push_back(i);
    }

    std::vector<ProofScheme> run(AtomId target) {
        pending_.insert(target);
        recurse();
        std::sort(out_.begin(), out_.end(), [](const ProofScheme& a, const ProofScheme& b) {
            if (a.length() != b.length()) return a.length() < b.length();
            return std::lexicographical_compare(
                a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
                [](const auto& x, const auto& y) { return x.clause < y.clause; });
        });
        return std::move(out_);
    }

private:
    void recurse() {
        if (pending_.empty()) {
            emit();
            return;
        }
        AtomId a = *pending_.begin();
        for (std::size_t ci : by_head_[a]) {
            const Clause& c = p_.clauses()[ci];
            std::vector<AtomId> added;
            for (AtomId q : c.pos) {
                if (q != a && !assigned_.count(q) && !pending_.count(q)) added.push_back(q);
            }
            if (assigned_.size() + pending_.size() + added.size() > max_steps_) continue;
            // A clause whose positive body needs its own head can never fire first.
            if (c.pos.contains(a)) continue;
            assigned_[a] = ci;
            pending_.erase(a);
            pending_.insert(added.begin(), added.end());
            recurse();
            for (AtomId q : added) pending_.erase(q);
            pending_.insert(a);
            assigned_.erase(a);
        }
    }

    // Linearizes the assignment, or drops it when the dependencies are cyclic.
    void emit() {
        ProofScheme s;
        std::set<AtomId> placed;
        while (placed.size() < assigned_.size()) {
            std::size_t best = p_.clauses().size();
            AtomId best_atom = 0;
            for (const auto& [atom, ci] : assigned_) {
                if (placed.count(atom)) continue;
                const Clause& c = p_.clauses()[ci];
                bool ready = std::all_of(c.pos.begin(), c.pos.end(), [&](AtomId q) { return placed.count(q) > 0; });
                if (ready && ci < best) {
                    best = ci;
                    best_atom = atom;
                }
            }
            if (best == p_.clauses().size()) return;
            placed.insert(best_atom);
            s.steps.push_back({best, best_atom});
            s.support = s.support.unite(p_.clauses()[best].neg);
        }
        out_.push_back(std::move(s));
    }

    const Program& p_;
    std::size_t max_steps_;
    std::vector<std::vector<std::size_t>> by_head_;
    std::map<AtomId, std::size_t> assigned_;
    std::set<AtomId> pending_;
    std::vector<ProofScheme> out_;
};

[[noreturn]] void explode(const Program& p, AtomId a, std::size_t cap) {
    throw Error(ErrorCode::SupportExplosion, "atom '" + p.universe().name(a) + "' exceeds " +
                                                 std::to_string(cap) + " supports");
}

void insert_minimal(std::vector<AtomSet>& family, const AtomSet& s, bool& changed) {
    for (const auto& existing : family) {
        if (existing.subset_of(s)) return;
    }
    family.erase(std::remove_if(family.begin(), family.end(), [&](const AtomSet& e) { return s.subset_of(e); }),
                 family.end());
    family.push_back(s);
    changed = true;
}

// Bottom-up saturation over (atom, support) pairs. With `minimal` set every
// family is kept as an inclusion antichain.
SupportFamily saturate(const Program& p, bool minimal, std::size_t cap) {
    const std::size_t n = p.atom_count();
    std::vector<std::set<AtomSet>> all(n);
    SupportFamily mins(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : p.clauses()) {
            std::vector<AtomSet> acc{c.neg};
            bool blocked = false;
            for (AtomId q : c.pos) {
                const std::vector<AtomSet>* src = nullptr;
                std::vector<AtomSet> tmp;
                if (minimal) {
                    src = &mins[q];
                } else {
                    tmp.assign(all[q].begin(), all[q].end());
                    src = &tmp;
                }
                if (src->empty()) {
                    blocked = true;
                    break;
                }
                std::set<AtomSet> next;
                for (const auto& a : acc) {
                    for (const auto& s : *src) next.insert(a.unite(s));
                }
                acc.assign(next.begin(), next.end());
                if (minimal) acc = minimize_antichain(std::move(acc));
            }
            if (blocked) continue;
            for (const auto& s : acc) {
                if (minimal) {
                    insert_minimal(mins[c.head], s, changed);
                } else if (all[c.head].insert(s).second) {
                    changed = true;
                    if (all[c.head].size() > cap) explode(p, c.head, cap);
                }
            }
        }
    }
    SupportFamily out(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (minimal) out[a] = std::move(mins[a]);
        else out[a].assign(all[a].begin(), all[a].end());
        std::sort(out[a].begin(), out[a].end(), SupportLess{});
    }
    return out;
}

} // namespace

std::vector<ProofScheme> enumerate_schemes(const Program& p, AtomId target, std::size_t max_steps) {
    if (max_steps == 0) throw Error(ErrorCode::InvalidArgument, "max_steps must be at least 1");
    if (target >= p.atom_count()) throw Error(ErrorCode::UnknownAtom, "target atom outside the universe");
    return SchemeSearch(p, max_steps).run(target);
}

std::vector<AtomSet> minimize_antichain(std::vector<AtomSet> sets) {
    std::sort(sets.begin(), sets.end(), [](const AtomSet& a, const AtomSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<AtomSet> out;
    for (auto& s : sets) {
        bool dominated = std::any_of(out.begin(), out.end(), [&](const AtomSet& m) { return m.subset_of(s); });
        if (!dominated) out.push_back(std::move(s));
    }
    return out;
}

SupportFamily derivation_supports(const Program& p, std::size_t cap) { return saturate(p, false, cap); }

SupportFamily all_supports(const Program& p, std::size_t cap) {
    SupportFamily trees = saturate(p, false, cap);
    // Unions of derivation supports of arbitrary derivable atoms: the
    // contribution of steps that do not feed the conclusion.
    std::set<AtomSet> pool;
    for (const auto& fam : trees) pool.insert(fam.begin(), fam.end());
    std::set<AtomSet> padding{AtomSet{}};
    for (const auto& s : pool) {
        std::vector<AtomSet> grown;
        for (const auto& v : padding) grown.push_back(v.unite(s));
        padding.insert(grown.begin(), grown.end());
        if (padding.size() > cap) {
            throw Error(ErrorCode::SupportExplosion,
                        "padding unions exceed " + std::to_string(cap) + " supports");
        }
    }
    SupportFamily out(p.atom_count());
    for (AtomId a = 0; a < p.atom_count(); ++a) {
        std::set<AtomSet> full;
        for (const auto& u : trees[a]) {
            for (const auto& v : padding) {
                full.insert(u.unite(v));
                if (full.size() > cap) explode(p, a, cap);
            }
        }
        out[a].assign(full.begin(), full.end());
        std::sort(out[a].begin(), out[a].end(), SupportLess{});
    }
    return out;
}

std::vector<AtomSet> all_supports(const Program& p, AtomId target, std::size_t cap) {
    return all_supports(p, cap).at(target);
}

SupportFamily minimal_supports(const Program& p, std::size_t cap) { return saturate(p, true, cap); }

std::vector<AtomSet> minimal_supports(const Program& p, AtomId target, std::size_t cap) {
    return minimal_supports(p, cap).at(target);
}

Interpretation gl_via_schemes(const SupportFamily& minimal, const Interpretation& m) {
    std::vector<AtomId> out;
    for (AtomId a = 0; a < minimal.size(); ++a) {
        if (std::any_of(minimal[a].begin(), minimal[a].end(), [&](const AtomSet& u) { return !u.intersects(m); })) {
            out.push_back(a);
        }
    }
    return AtomSet(std::move(out));
}

Interpretation gl_via_schemes(const Program& p, const Interpretation& m) {
    return gl_via_schemes(minimal_supports(p), m);
}

bool is_stable_via_schemes(const SupportFamily& minimal, const Interpretation& m) {
    for (AtomId a = 0; a < minimal.size(); ++a) {
        bool admitted = std::any_of(minimal[a].begin(), minimal[a].end(),
                                    [&](const AtomSet& u) { return !u.intersects(m); });
        if (admitted != m.contains(a)) return false;
    }
    return true;
}

std::vector<Interpretation> stable_models_via_schemes(const Program& p, std::size_t limit) {
    const std::size_t n = p.atom_count();
    if (n > limit || n >= 63) {
        throw Error(ErrorCode::TooManyAtoms, "scheme-based search over " + std::to_string(n) +
                                                 " atoms exceeds the limit of " + std::to_string(limit));
    }
    SupportFamily fam = minimal_supports(p);
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Interpretation m = AtomSet::from_mask(mask);
        if (is_stable_via_schemes(fam, m)) out.push_back(std::move(m));
    }
    sort_models(out);
    return out;
}

} // namespace lps
