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

#include "lps/cc.hpp"

#include "lexer.hpp"
#include "lps/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace lps {

using detail::Lexer;
using detail::Tok;
using detail::Token;

CCSupport::CCSupport(std::vector<UpperConstraint> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

CCSupport CCSupport::unite(const CCSupport& other) const {
    std::vector<UpperConstraint> merged = items_;
    merged.insert(merged.end(), other.items_.begin(), other.items_.end());
    return CCSupport(std::move(merged));
}

bool CCSupport::admitted_by(const Interpretation& m) const {
    return std::all_of(items_.begin(), items_.end(),
                       [&](const UpperConstraint& c) { return m.intersection_size(c.atoms) <= c.bound; });
}

CCProgram::CCProgram(Universe universe, std::vector<CCRule> rules)
    : universe_(std::move(universe)), rules_(std::move(rules)) {
    for (const auto& r : rules_) {
        bool ok = r.head < universe_.size();
        for (const auto& c : r.body) {
            if (c.atoms.empty()) {
                throw Error(ErrorCode::InvalidArgument, "cardinality constraint over an empty set");
            }
            if (c.lower && c.upper && *c.lower > *c.upper) {
                throw Error(ErrorCode::InvalidArgument, "cardinality constraint with lower bound above upper bound");
            }
            ok = ok && c.atoms.max() < universe_.size();
        }
        if (!ok) throw Error(ErrorCode::InvalidArgument, "rule mentions atom id outside the universe");
    }
}

std::vector<CCClause> CCProgram::clauses() const {
    std::vector<CCClause> out;
    out.reserve(rules_.size());
    for (const auto& r : rules_) out.push_back(cc_transform(r));
    return out;
}

// --- parsing ---------------------------------------------------------------

namespace {

bool is_number(const Token& t) {
    return t.kind == Tok::Name && !t.text.empty() &&
           std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::uint32_t to_bound(Lexer& lex, const Token& t) {
    if (t.text.size() > 9) lex.fail(t, "bound '" + t.text + "' is too large");
    return static_cast<std::uint32_t>(std::stoul(t.text));
}

struct RawConstraint {
    std::optional<std::uint32_t> lower;
    std::vector<std::string> atoms;
    std::optional<std::uint32_t> upper;
    Token at;
};

struct RawRule {
    std::string head;
    std::vector<RawConstraint> body;
};

Token expect_atom(Lexer& lex) {
    Token t = lex.expect(Tok::Name, "atom");
    if (!is_valid_atom_name(t.text)) lex.fail(t, "invalid atom name '" + t.text + "'");
    return t;
}

RawConstraint parse_body_element(Lexer& lex) {
    RawConstraint rc;
    rc.at = lex.peek();
    if (is_number(lex.peek()) && lex.peek2().kind == Tok::LBrace) {
        rc.lower = to_bound(lex, lex.take());
    }
    if (lex.peek().kind == Tok::LBrace) {
        lex.take();
        rc.atoms.push_back(expect_atom(lex).text);
        while (lex.peek().kind == Tok::Semicolon) {
            lex.take();
            rc.atoms.push_back(expect_atom(lex).text);
        }
        lex.expect(Tok::RBrace, "'}'");
        if (is_number(lex.peek())) rc.upper = to_bound(lex, lex.take());
        return rc;
    }
    if (rc.lower) lex.fail(lex.peek(), "expected '{' after lower bound");
    if (lex.peek().kind == Tok::Name && lex.peek().text == "not" && lex.peek2().kind == Tok::Name) {
        lex.take();
        rc.atoms.push_back(expect_atom(lex).text);
        rc.upper = 0;
    } else {
        rc.atoms.push_back(expect_atom(lex).text);
        rc.lower = 1;
    }
    return rc;
}

} // namespace

CCProgram cc_parse(std::string_view text) {
    Lexer lex(text);
    std::vector<std::string> declared;
    std::vector<RawRule> raw;
    while (lex.peek().kind != Tok::End) {
        if (lex.peek().kind == Tok::Directive) {
            Token d = lex.take();
            if (d.text != "#atoms") lex.fail(d, "unknown directive '" + d.text + "'");
            declared.push_back(expect_atom(lex).text);
            while (lex.peek().kind == Tok::Comma) {
                lex.take();
                declared.push_back(expect_atom(lex).text);
            }
            lex.expect(Tok::Dot, "'.'");
            continue;
        }
        const Token& h = lex.peek();
        if (h.kind == Tok::LBrace || (is_number(h) && lex.peek2().kind == Tok::LBrace)) {
            throw ParseError(ErrorCode::CompoundHead, h.line, h.column,
                             "rule heads must be single atoms, found a cardinality constraint");
        }
        RawRule rr;
        rr.head = expect_atom(lex).text;
        if (lex.peek().kind == Tok::Arrow) {
            lex.take();
            rr.body.push_back(parse_body_element(lex));
            while (lex.peek().kind == Tok::Comma) {
                lex.take();
                rr.body.push_back(parse_body_element(lex));
            }
        }
        lex.expect(Tok::Dot, "'.'");
        raw.push_back(std::move(rr));
    }

    Universe u;
    for (const auto& name : declared) u.intern(name);
    for (const auto& rr : raw) {
        u.intern(rr.head);
        for (const auto& c : rr.body) {
            for (const auto& a : c.atoms) u.intern(a);
        }
    }
    std::vector<CCRule> rules;
    for (const auto& rr : raw) {
        CCRule r;
        r.head = u.at(rr.head);
        for (const auto& rc : rr.body) {
            CardConstraint c;
            std::vector<AtomId> ids;
            for (const auto& a : rc.atoms) ids.push_back(u.at(a));
            c.atoms = AtomSet(std::move(ids));
            if (rc.lower && rc.upper && *rc.lower > *rc.upper) {
                throw ParseError(rc.at.line, rc.at.column, "lower bound exceeds upper bound");
            }
            if (rc.lower && *rc.lower > 0) c.lower = rc.lower;
            if (rc.upper && *rc.upper < c.atoms.size()) c.upper = rc.upper;
            r.body.push_back(std::move(c));
        }
        rules.push_back(std::move(r));
    }
    return CCProgram(std::move(u), std::move(rules));
}

namespace {

std::string format_set(const Universe& u, const AtomSet& s) {
    std::string out = "{";
    bool first = true;
    for (AtomId a : s) {
        if (!first) out += "; ";
        first = false;
        out += u.name(a);
    }
    return out + "}";
}

} // namespace

std::string format_constraint(const Universe& u, const CardConstraint& c) {
    std::string out;
    if (c.lower) out += std::to_string(*c.lower) + " ";
    out += format_set(u, c.atoms);
    if (c.upper) out += " " + std::to_string(*c.upper);
    return out;
}

std::string format_upper(const Universe& u, const UpperConstraint& c) {
    return format_set(u, c.atoms) + " " + std::to_string(c.bound);
}

std::string format_cc_clause(const Universe& u, const CCClause& c) {
    std::string out = u.name(c.head);
    bool first = true;
    auto sep = [&] {
        out += first ? " :- " : ", ";
        first = false;
    };
    for (const auto& l : c.lowers) {
        sep();
        out += std::to_string(l.bound) + " " + format_set(u, l.atoms);
    }
    for (const auto& up : c.uppers) {
        sep();
        out += format_upper(u, up);
    }
    return out + ".";
}

std::string format_cc_program(const CCProgram& p) {
    const auto& u = p.universe();
    std::ostringstream os;
    if (u.size() > 0) {
        os << "#atoms ";
        for (std::size_t i = 0; i < u.size(); ++i) os << (i ? ", " : "") << u.name(static_cast<AtomId>(i));
        os << ".\n";
    }
    for (const auto& r : p.rules()) {
        os << u.name(r.head);
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            os << (i ? ", " : " :- ") << format_constraint(u, r.body[i]);
        }
        os << ".\n";
    }
    return os.str();
}

// --- semantics -------------------------------------------------------------

bool cc_satisfies(const Interpretation& m, const CardConstraint& c) {
    std::size_t k = m.intersection_size(c.atoms);
    if (c.lower && k < *c.lower) return false;
    if (c.upper && k > *c.upper) return false;
    return true;
}

CCClause cc_transform(const CCRule& r) {
    CCClause c;
    c.head = r.head;
    for (const auto& k : r.body) {
        if (k.lower) c.lowers.push_back({*k.lower, k.atoms});
    }
    for (const auto& k : r.body) {
        if (k.upper) c.uppers.push_back({k.atoms, *k.upper});
    }
    return c;
}

namespace {

bool lowers_met(const CCClause& c, const Interpretation& m) {
    return std::all_of(c.lowers.begin(), c.lowers.end(),
                       [&](const LowerConstraint& l) { return m.intersection_size(l.atoms) >= l.bound; });
}

} // namespace

Interpretation cc_tp_step(const std::vector<CCClause>& horn, const Interpretation& m) {
    std::vector<AtomId> out;
    for (std::size_t i = 0; i < horn.size(); ++i) {
        if (!horn[i].is_horn()) {
            throw Error(ErrorCode::NotCCHorn, "clause " + std::to_string(i + 1) + " has upper constraints");
        }
        if (lowers_met(horn[i], m)) out.push_back(horn[i].head);
    }
    return AtomSet(std::move(out));
}

Interpretation cc_least_model(const std::vector<CCClause>& horn) {
    Interpretation cur;
    for (;;) {
        Interpretation next = cc_tp_step(horn, cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

CCHornProgram nss_reduct(const CCProgram& p, const Interpretation& m) {
    CCHornProgram out;
    out.universe = p.universe();
    for (const auto& c : p.clauses()) {
        bool violated = std::any_of(c.uppers.begin(), c.uppers.end(), [&](const UpperConstraint& u) {
            return m.intersection_size(u.atoms) > u.bound;
        });
        if (violated) continue;
        out.clauses.push_back(CCClause{c.head, c.lowers, {}});
    }
    return out;
}

Interpretation ccgl(const CCProgram& p, const Interpretation& m) { return cc_least_model(nss_reduct(p, m).clauses); }

bool is_cc_stable(const CCProgram& p, const Interpretation& m) { return ccgl(p, m) == m; }

std::vector<Interpretation> cc_stable_models_bruteforce(const CCProgram& p, std::size_t limit) {
    const std::size_t n = p.atom_count();
    if (n > limit || n >= 63) {
        throw Error(ErrorCode::TooManyAtoms, "brute-force search over " + std::to_string(n) +
                                                 " atoms exceeds the limit of " + std::to_string(limit));
    }
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Interpretation m = AtomSet::from_mask(mask);
        if (is_cc_stable(p, m)) out.push_back(std::move(m));
    }
    sort_models(out);
    return out;
}

// --- supports --------------------------------------------------------------

Formula cc_support_formula(const CCSupport& u) {
    std::vector<Formula> conjuncts;
    for (const auto& c : u.items()) {
        const std::size_t n = c.atoms.size();
        if (c.bound >= n) continue;
        const std::size_t k = n - c.bound;
        auto ids = c.atoms.ids();
        // k-subsets of X in lexicographic order.
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        std::vector<Formula> disjuncts;
        for (;;) {
            std::vector<AtomId> w;
            for (std::size_t i : idx) w.push_back(ids[i]);
            disjuncts.push_back(Formula::neg_set(AtomSet(std::move(w))));
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        conjuncts.push_back(Formula::disj(std::move(disjuncts)));
    }
    return Formula::conj(std::move(conjuncts));
}

bool cc_support_preceq(const CCSupport& u, const CCSupport& v, std::size_t limit) {
    return entails(cc_support_formula(v), cc_support_formula(u), limit);
}

namespace {

// Interns supports and memoizes the preorder between them.
class PreceqCache {
public:
    std::size_t intern(const CCSupport& s) {
        auto [it, fresh] = ids_.emplace(s, supports_.size());
        if (fresh) {
            supports_.push_back(s);
            formulas_.push_back(cc_support_formula(s));
        }
        return it->second;
    }

    const CCSupport& support(std::size_t id) const { return supports_[id]; }

    bool preceq(std::size_t a, std::size_t b) {
        if (a == b) return true;
        auto key = (static_cast<std::uint64_t>(a) << 32) | b;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool r = entails(formulas_[b], formulas_[a]);
        memo_.emplace(key, r);
        return r;
    }

    bool strictly_below(std::size_t a, std::size_t b) { return preceq(a, b) && !preceq(b, a); }

private:
    std::map<CCSupport, std::size_t> ids_;
    std::vector<CCSupport> supports_;
    std::vector<Formula> formulas_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

// Drops members strictly above another member; equivalent ones stay.
std::vector<std::size_t> prune(PreceqCache& cache, std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::size_t> out;
    for (std::size_t s : ids) {
        bool dominated = std::any_of(ids.begin(), ids.end(), [&](std::size_t t) { return cache.strictly_below(t, s); });
        if (!dominated) out.push_back(s);
    }
    return out;
}

bool canonical_less(const CCSupport& a, const CCSupport& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Supports obtained from one clause given the current families. Lower
// constraints choose exactly `bound` atoms of X, one support per atom.
template <class Combine>
std::vector<CCSupport> clause_candidates(const CCClause& c, const std::vector<std::vector<CCSupport>>& fam,
                                         Combine reduce) {
    std::vector<CCSupport> acc{CCSupport(c.uppers)};
    for (const auto& low : c.lowers) {
        if (low.bound == 0) continue;
        std::vector<AtomId> avail;
        for (AtomId a : low.atoms) {
            if (!fam[a].empty()) avail.push_back(a);
        }
        if (avail.size() < low.bound) return {};
        std::set<CCSupport> options;
        const std::size_t k = low.bound;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::vector<CCSupport> partial{CCSupport{}};
            for (std::size_t i : idx) {
                std::set<CCSupport> next;
                for (const auto& x : partial) {
                    for (const auto& s : fam[avail[i]]) next.insert(x.unite(s));
                }
                partial = reduce(std::vector<CCSupport>(next.begin(), next.end()));
            }
            options.insert(partial.begin(), partial.end());
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == avail.size() - k + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        std::set<CCSupport> next;
        for (const auto& a : acc) {
            for (const auto& o : options) next.insert(a.unite(o));
        }
        acc = reduce(std::vector<CCSupport>(next.begin(), next.end()));
    }
    return acc;
}

[[noreturn]] void cc_explode(const CCProgram& p, AtomId a, std::size_t cap) {
    throw Error(ErrorCode::SupportExplosion, "atom '" + p.universe().name(a) + "' exceeds " +
                                                 std::to_string(cap) + " supports");
}

std::vector<std::vector<CCSupport>> cc_tree_supports(const CCProgram& p, std::size_t cap) {
    const auto clauses = p.clauses();
    std::vector<std::set<CCSupport>> all(p.atom_count());
    std::vector<std::vector<CCSupport>> view(p.atom_count());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : clauses) {
            auto cands = clause_candidates(c, view, [](std::vector<CCSupport> v) { return v; });
            for (auto& s : cands) {
                if (all[c.head].insert(s).second) {
                    changed = true;
                    if (all[c.head].size() > cap) cc_explode(p, c.head, cap);
                }
            }
        }
        for (std::size_t a = 0; a < all.size(); ++a) view[a].assign(all[a].begin(), all[a].end());
    }
    return view;
}

} // namespace

CCSupportFamily cc_minimal_supports(const CCProgram& p, std::size_t cap) {
    const auto clauses = p.clauses();
    const std::size_t n = p.atom_count();
    PreceqCache cache;
    std::vector<std::vector<std::size_t>> fam(n);
    std::vector<std::vector<CCSupport>> view(n);
    auto reduce = [&](std::vector<CCSupport> v) {
        std::vector<std::size_t> ids;
        for (const auto& s : v) ids.push_back(cache.intern(s));
        std::vector<CCSupport> out;
        for (std::size_t id : prune(cache, std::move(ids))) out.push_back(cache.support(id));
        return out;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : clauses) {
            for (const auto& s : clause_candidates(c, view, reduce)) {
                std::size_t id = cache.intern(s);
                auto& f = fam[c.head];
                if (std::find(f.begin(), f.end(), id) != f.end()) continue;
                if (std::any_of(f.begin(), f.end(), [&](std::size_t t) { return cache.strictly_below(t, id); })) {
                    continue;
                }
                f.erase(std::remove_if(f.begin(), f.end(), [&](std::size_t t) { return cache.strictly_below(id, t); }),
                        f.end());
                f.push_back(id);
                if (f.size() > cap) cc_explode(p, c.head, cap);
                view[c.head].clear();
                for (std::size_t t : f) view[c.head].push_back(cache.support(t));
                changed = true;
            }
        }
    }

    CCSupportFamily out(n);
    for (std::size_t a = 0; a < n; ++a) {
        // Collapse each equivalence class to its canonical member.
        std::vector<CCSupport> members;
        for (std::size_t id : fam[a]) members.push_back(cache.support(id));
        std::sort(members.begin(), members.end(), canonical_less);
        std::vector<std::size_t> kept;
        for (const auto& s : members) {
            std::size_t id = cache.intern(s);
            bool dup = std::any_of(kept.begin(), kept.end(),
                                   [&](std::size_t k) { return cache.preceq(k, id) && cache.preceq(id, k); });
            if (!dup) kept.push_back(id);
        }
        for (std::size_t id : kept) out[a].push_back(cache.support(id));
    }
    return out;
}

std::vector<CCSupport> cc_minimal_supports(const CCProgram& p, AtomId target, std::size_t cap) {
    return cc_minimal_supports(p, cap).at(target);
}

CCSupportFamily cc_all_supports(const CCProgram& p, std::size_t cap) {
    auto trees = cc_tree_supports(p, cap);
    std::set<CCSupport> pool;
    for (const auto& f : trees) pool.insert(f.begin(), f.end());
    std::set<CCSupport> padding{CCSupport{}};
    for (const auto& s : pool) {
        std::vector<CCSupport> grown;
        for (const auto& v : padding) grown.push_back(v.unite(s));
        padding.insert(grown.begin(), grown.end());
        if (padding.size() > cap) {
            throw Error(ErrorCode::SupportExplosion, "padding unions exceed " + std::to_string(cap) + " supports");
        }
    }
    CCSupportFamily out(p.atom_count());
    for (AtomId a = 0; a < p.atom_count(); ++a) {
        std::set<CCSupport> full;
        for (const auto& u : trees[a]) {
            for (const auto& v : padding) {
                full.insert(u.unite(v));
                if (full.size() > cap) cc_explode(p, a, cap);
            }
        }
        out[a].assign(full.begin(), full.end());
        std::sort(out[a].begin(), out[a].end(), canonical_less);
    }
    return out;
}

namespace {

Formula cc_rhs(const std::vector<CCSupport>& supports) {
    if (supports.empty()) return Formula::falsity();
    std::vector<Formula> disjuncts;
    for (const auto& s : supports) {
        if (s.empty()) return Formula::truth();
        disjuncts.push_back(cc_support_formula(s));
    }
    return Formula::disj(std::move(disjuncts));
}

} // namespace

CCTheoryBuild cc_build_theory(const CCProgram& p, bool reduced, std::size_t cap) {
    CCTheoryBuild out;
    out.theory.universe = p.universe();
    CCSupportFamily fam = reduced ? cc_minimal_supports(p, cap) : cc_all_supports(p, cap);
    for (AtomId a = 0; a < p.atom_count(); ++a) {
        if (!reduced && fam[a].size() > 1000) {
            out.warnings.push_back("atom '" + p.universe().name(a) + "' has " + std::to_string(fam[a].size()) +
                                   " supports in the full defining equation");
        }
        out.theory.formulas.push_back(Formula::iff(Formula::atom(a), cc_rhs(fam[a])));
    }
    return out;
}

Theory cc_theory(const CCProgram& p, bool reduced) { return cc_build_theory(p, reduced).theory; }

std::vector<Interpretation> cc_stable_models_via_equations(const CCProgram& p, bool reduced,
                                                           const EnumerateOptions& opts) {
    ModelList r = all_models(cc_theory(p, reduced), opts);
    if (!r.complete) throw Error(ErrorCode::Timeout, "model enumeration timed out");
    return std::move(r.models);
}

Interpretation cc_gl_via_schemes(const CCSupportFamily& minimal, const Interpretation& m) {
    std::vector<AtomId> out;
    for (AtomId a = 0; a < minimal.size(); ++a) {
        if (std::any_of(minimal[a].begin(), minimal[a].end(),
                        [&](const CCSupport& u) { return cc_support_formula(u).evaluate(m); })) {
            out.push_back(a);
        }
    }
    return AtomSet(std::move(out));
}

Interpretation cc_gl_via_schemes(const CCProgram& p, const Interpretation& m) {
    return cc_gl_via_schemes(cc_minimal_supports(p), m);
}

CCProgram embed_normal_program(const Program& p) {
    std::vector<CCRule> rules;
    for (const auto& c : p.clauses()) {
        CCRule r;
        r.head = c.head;
        for (AtomId a : c.pos) r.body.push_back(CardConstraint{1, AtomSet{a}, std::nullopt});
        for (AtomId a : c.neg) r.body.push_back(CardConstraint{std::nullopt, AtomSet{a}, 0});
        rules.push_back(std::move(r));
    }
    return CCProgram(p.universe(), std::move(rules));
}

} // namespace lps
