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

#include "lps/error.hpp"
#include "lps/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace lps {

namespace {

using K = Formula::Kind;

Formula negate(const Formula& f) {
    switch (f.kind()) {
    case K::True: return Formula::falsity();
    case K::False: return Formula::truth();
    case K::Atom: return Formula::neg(f.atom_id());
    case K::NegAtom: return Formula::atom(f.atom_id());
    case K::And:
    case K::Or: {
        std::vector<Formula> kids;
        for (const auto& c : f.children()) kids.push_back(negate(c));
        return f.kind() == K::And ? Formula::disj(std::move(kids)) : Formula::conj(std::move(kids));
    }
    case K::Iff: return Formula::iff(f.children()[0], negate(f.children()[1]));
    }
    return f;
}

// Removes constants below the root.
Formula simplify(const Formula& f) {
    switch (f.kind()) {
    case K::And:
    case K::Or: {
        const bool is_and = f.kind() == K::And;
        std::vector<Formula> kids;
        for (const auto& c : f.children()) {
            Formula s = simplify(c);
            if (s.kind() == (is_and ? K::False : K::True)) return s;
            if (s.kind() == (is_and ? K::True : K::False)) continue;
            kids.push_back(std::move(s));
        }
        return is_and ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    }
    case K::Iff: {
        Formula a = simplify(f.children()[0]);
        Formula b = simplify(f.children()[1]);
        if (a.is_constant()) std::swap(a, b);
        if (b.kind() == K::True) return a;
        if (b.kind() == K::False) return negate(a);
        return Formula::iff(std::move(a), std::move(b));
    }
    default: return f;
    }
}

class Encoder {
public:
    Encoder(const Theory& t, const EncodeOptions& opts) : universe_(t.universe), opts_(opts) {
        cnf_.atom_count = t.universe.size();
        cnf_.var_count = cnf_.atom_count;
    }

    void assert_formula(const Formula& raw) {
        Formula f = simplify(raw);
        switch (f.kind()) {
        case K::True: return;
        case K::False: add({}); return;
        case K::Atom:
        case K::NegAtom: add({literal(f)}); return;
        case K::And:
            for (const auto& c : f.children()) assert_formula(c);
            return;
        case K::Or: {
            std::vector<Lit> cl;
            for (const auto& c : f.children()) cl.push_back(name(c));
            add(std::move(cl));
            return;
        }
        case K::Iff: {
            const Formula& lhs = f.children()[0];
            const Formula& rhs = f.children()[1];
            if (lhs.is_literal()) {
                defining(literal(lhs), rhs);
            } else if (rhs.is_literal()) {
                defining(literal(rhs), lhs);
            } else {
                Lit x = name(lhs);
                Lit y = name(rhs);
                add({-x, y});
                add({x, -y});
            }
            return;
        }
        }
    }

    CnfEncoding finish() { return std::move(cnf_); }

private:
    static Lit literal(const Formula& f) {
        Lit v = static_cast<Lit>(f.atom_id()) + 1;
        return f.kind() == K::Atom ? v : -v;
    }

    void add(std::vector<Lit> cl) {
        std::sort(cl.begin(), cl.end(), [](Lit a, Lit b) {
            return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
        });
        cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
        for (std::size_t i = 1; i < cl.size(); ++i) {
            if (cl[i] == -cl[i - 1]) return; // tautology
        }
        cnf_.clauses.push_back(std::move(cl));
    }

    Lit fresh(const Formula& f) {
        cnf_.aux_names.push_back(format_formula(universe_, f));
        return static_cast<Lit>(++cnf_.var_count);
    }

    // A literal equivalent to f (f must be constant-free).
    Lit name(const Formula& f) {
        if (f.is_literal()) return literal(f);
        if (f.is_constant()) {
            // Only reachable for a top-level constant in an Iff; name it.
            Lit x = fresh(f);
            add({f.kind() == K::True ? x : -x});
            return x;
        }
        std::vector<Lit> kids;
        for (const auto& c : f.children()) kids.push_back(name(c));
        Lit x = fresh(f);
        if (f.kind() == K::And) {
            std::vector<Lit> back{x};
            for (Lit l : kids) {
                add({-x, l});
                back.push_back(-l);
            }
            add(std::move(back));
        } else if (f.kind() == K::Or) {
            std::vector<Lit> fwd{-x};
            for (Lit l : kids) {
                add({x, -l});
                fwd.push_back(l);
            }
            add(std::move(fwd));
        } else {
            Lit a = kids[0];
            Lit b = kids[1];
            add({-x, -a, b});
            add({-x, a, -b});
            add({x, a, b});
            add({x, -a, -b});
        }
        return x;
    }

    // head <-> (c1 | ... | ck), each c_j a literal or a conjunction of
    // literals, encoded without auxiliaries when distribution stays small.
    void defining(Lit head, const Formula& rhs) {
        std::vector<Formula> disjuncts;
        if (rhs.kind() == K::Or) disjuncts = rhs.children();
        else disjuncts.push_back(rhs);

        std::vector<std::vector<Lit>> parts;
        std::size_t product = 1;
        bool direct = true;
        for (const auto& d : disjuncts) {
            std::vector<Lit> lits;
            if (d.is_literal()) {
                lits.push_back(literal(d));
            } else if (d.kind() == K::And &&
                       std::all_of(d.children().begin(), d.children().end(),
                                   [](const Formula& c) { return c.is_literal(); })) {
                for (const auto& c : d.children()) lits.push_back(literal(c));
            } else {
                lits.push_back(name(d));
            }
            product = std::min<std::size_t>(product * lits.size(), opts_.direct_product_limit + 1);
            parts.push_back(std::move(lits));
        }
        if (product > opts_.direct_product_limit) direct = false;

        // c_j -> head
        for (const auto& lits : parts) {
            std::vector<Lit> cl{head};
            for (Lit l : lits) cl.push_back(-l);
            add(std::move(cl));
        }
        // head -> OR c_j
        if (!direct) {
            std::vector<Lit> cl{-head};
            for (std::size_t j = 0; j < parts.size(); ++j) {
                if (parts[j].size() == 1) {
                    cl.push_back(parts[j][0]);
                } else {
                    Lit x = fresh(disjuncts[j]);
                    std::vector<Lit> back{x};
                    for (Lit l : parts[j]) {
                        add({-x, l});
                        back.push_back(-l);
                    }
                    add(std::move(back));
                    cl.push_back(x);
                }
            }
            add(std::move(cl));
            return;
        }
        std::vector<std::size_t> pick(parts.size(), 0);
        for (;;) {
            std::vector<Lit> cl{-head};
            for (std::size_t j = 0; j < parts.size(); ++j) cl.push_back(parts[j][pick[j]]);
            add(std::move(cl));
            std::size_t j = 0;
            while (j < parts.size() && ++pick[j] == parts[j].size()) pick[j++] = 0;
            if (j == parts.size()) break;
        }
    }

    const Universe& universe_;
    EncodeOptions opts_;
    CnfEncoding cnf_;
};

} // namespace

CnfEncoding encode_theory(const Theory& t, const EncodeOptions& opts) {
    Encoder enc(t, opts);
    for (const auto& f : t.formulas) enc.assert_formula(f);
    return enc.finish();
}

std::string to_dimacs(const CnfEncoding& cnf) {
    std::ostringstream os;
    os << "c atoms 1.." << cnf.atom_count << '\n';
    for (std::size_t i = 0; i < cnf.aux_names.size(); ++i) {
        os << "c aux " << cnf.atom_count + 1 + i << " = " << cnf.aux_names[i] << '\n';
    }
    os << "p cnf " << cnf.var_count << ' ' << cnf.clauses.size() << '\n';
    for (const auto& cl : cnf.clauses) {
        for (Lit l : cl) os << l << ' ';
        os << "0\n";
    }
    return os.str();
}

// --- enumerator ------------------------------------------------------------

namespace {
inline std::size_t widx(Lit l) { return 2 * static_cast<std::size_t>(std::abs(l)) + (l < 0 ? 1 : 0); }
} // namespace

ModelEnumerator::ModelEnumerator(const CnfEncoding& cnf)
    : atoms_(cnf.atom_count), vars_(cnf.var_count), watches_(2 * (cnf.var_count + 1)),
      assign_(cnf.var_count + 1, 0) {
    for (const auto& cl : cnf.clauses) {
        if (cl.empty()) {
            trivially_unsat_ = true;
        } else if (cl.size() == 1) {
            units_.push_back(cl[0]);
        } else {
            watches_[widx(cl[0])].push_back(clauses_.size());
            watches_[widx(cl[1])].push_back(clauses_.size());
            clauses_.push_back(cl);
        }
    }
}

Lit ModelEnumerator::value(Lit l) const {
    signed char v = assign_[static_cast<std::size_t>(std::abs(l))];
    return l > 0 ? v : -v;
}

bool ModelEnumerator::enqueue(Lit l) {
    Lit v = value(l);
    if (v > 0) return true;
    if (v < 0) return false;
    assign_[static_cast<std::size_t>(std::abs(l))] = l > 0 ? 1 : -1;
    trail_.push_back(l);
    return true;
}

bool ModelEnumerator::propagate() {
    while (qhead_ < trail_.size()) {
        Lit falsified = -trail_[qhead_++];
        auto& ws = watches_[widx(falsified)];
        std::size_t keep = 0;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            std::size_t ci = ws[i];
            auto& cl = clauses_[ci];
            if (cl[0] == falsified) std::swap(cl[0], cl[1]);
            if (value(cl[0]) > 0) {
                ws[keep++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < cl.size(); ++k) {
                if (value(cl[k]) >= 0) {
                    std::swap(cl[1], cl[k]);
                    watches_[widx(cl[1])].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            ws[keep++] = ci;
            if (!enqueue(cl[0])) {
                for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
                ws.resize(keep);
                return false;
            }
        }
        ws.resize(keep);
    }
    return true;
}

bool ModelEnumerator::backtrack() {
    while (!decisions_.empty()) {
        Decision& d = decisions_.back();
        while (trail_.size() > d.trail_pos) {
            assign_[static_cast<std::size_t>(std::abs(trail_.back()))] = 0;
            trail_.pop_back();
        }
        qhead_ = d.trail_pos;
        if (!d.flipped) {
            d.flipped = true;
            d.lit = -d.lit;
            enqueue(d.lit);
            return true;
        }
        decisions_.pop_back();
    }
    return false;
}

ModelList ModelEnumerator::run(std::optional<std::chrono::milliseconds> timeout) {
    ModelList result;
    if (trivially_unsat_) return result;
    for (Lit u : units_) {
        if (!enqueue(u)) return result;
    }
    const auto start = std::chrono::steady_clock::now();
    std::size_t steps = 0;
    std::size_t next_free = 1;
    for (;;) {
        if (timeout && (++steps & 0x3ff) == 0 && std::chrono::steady_clock::now() - start > *timeout) {
            result.complete = false;
            break;
        }
        if (!propagate()) {
            if (!backtrack()) break;
            continue;
        }
        next_free = 1;
        while (next_free <= vars_ && assign_[next_free] != 0) ++next_free;
        if (next_free > vars_) {
            std::vector<AtomId> ids;
            for (std::size_t v = 1; v <= atoms_; ++v) {
                if (assign_[v] > 0) ids.push_back(static_cast<AtomId>(v - 1));
            }
            result.models.emplace_back(std::move(ids));
            if (!backtrack()) break;
            continue;
        }
        Lit l = -static_cast<Lit>(next_free);
        decisions_.push_back({trail_.size(), l, false});
        enqueue(l);
    }
    sort_models(result.models);
    result.models.erase(std::unique(result.models.begin(), result.models.end()), result.models.end());
    return result;
}

ModelList all_models(const Theory& t, const EnumerateOptions& opts) {
    ModelEnumerator engine(encode_theory(t, opts.encode));
    return engine.run(opts.timeout);
}

} // namespace lps
