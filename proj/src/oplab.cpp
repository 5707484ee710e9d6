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

#include "lps/oplab.hpp"

#include "lps/equations.hpp"
#include "lps/error.hpp"
#include "lps/fixpoint.hpp"

#include <string>

namespace lps {

using Mask = OperatorTable::Mask;

OperatorTable::OperatorTable(Universe universe, std::vector<Mask> entries)
    : universe_(std::move(universe)), entries_(std::move(entries)) {
    if (universe_.size() > kMaxTableAtoms) {
        throw Error(ErrorCode::TooManyAtoms, "operator tables are limited to " + std::to_string(kMaxTableAtoms) +
                                                 " atoms");
    }
    if (entries_.size() != (std::size_t{1} << universe_.size())) {
        throw Error(ErrorCode::InvalidArgument, "operator table must have one entry per subset");
    }
    for (Mask m : entries_) {
        if (m & ~full()) throw Error(ErrorCode::InvalidArgument, "operator value outside the universe");
    }
}

OperatorTable OperatorTable::constant(Universe universe, Mask value) {
    std::vector<Mask> entries(std::size_t{1} << universe.size(), value);
    return OperatorTable(std::move(universe), std::move(entries));
}

OperatorTable OperatorTable::from_function(Universe universe, const std::function<Mask(Mask)>& f) {
    std::vector<Mask> entries(std::size_t{1} << universe.size());
    for (Mask x = 0; x < entries.size(); ++x) entries[x] = f(x);
    return OperatorTable(std::move(universe), std::move(entries));
}

namespace {

std::optional<MonotonicityWitness> find_violation(const OperatorTable& f, bool anti) {
    const Mask n = static_cast<Mask>(f.entries().size());
    for (Mask x = 0; x < n; ++x) {
        for (Mask y = x + 1; y < n; ++y) {
            if ((x & y) != x) continue;
            Mask small = anti ? f(y) : f(x);
            Mask large = anti ? f(x) : f(y);
            if ((small & large) != small) return MonotonicityWitness{x, y};
        }
    }
    return std::nullopt;
}

std::string mask_names(const Universe& u, Mask m) {
    std::string out = "{";
    bool first = true;
    for (AtomId a = 0; a < u.size(); ++a) {
        if (!((m >> a) & 1u)) continue;
        if (!first) out += ",";
        first = false;
        out += u.name(a);
    }
    return out + "}";
}

} // namespace

std::optional<MonotonicityWitness> check_antimonotone(const OperatorTable& f) { return find_violation(f, true); }
std::optional<MonotonicityWitness> check_monotone(const OperatorTable& f) { return find_violation(f, false); }

OperatorTable dual_operator(const OperatorTable& f) {
    const Mask all = f.full();
    return OperatorTable::from_function(f.universe(), [&](Mask x) { return all & ~f(all & ~x); });
}

OperatorTable gl_table(const Program& p) {
    if (p.atom_count() > kMaxTableAtoms) {
        throw Error(ErrorCode::TooManyAtoms, "operator tables are limited to " + std::to_string(kMaxTableAtoms) +
                                                 " atoms");
    }
    return OperatorTable::from_function(p.universe(), [&](Mask x) {
        return static_cast<Mask>(gl_operator(p, AtomSet::from_mask(x)).to_mask());
    });
}

OperatorTable tp_table(const Program& horn) {
    if (horn.atom_count() > kMaxTableAtoms) {
        throw Error(ErrorCode::TooManyAtoms, "operator tables are limited to " + std::to_string(kMaxTableAtoms) +
                                                 " atoms");
    }
    return OperatorTable::from_function(horn.universe(), [&](Mask x) {
        return static_cast<Mask>(tp_step(horn, AtomSet::from_mask(x)).to_mask());
    });
}

Program program_from_operator(const OperatorTable& f) {
    if (auto w = check_antimonotone(f)) {
        throw Error(ErrorCode::NotAntimonotone,
                    "operator is not antimonotone: " + mask_names(f.universe(), w->smaller) + " is contained in " +
                        mask_names(f.universe(), w->larger) + " but its image is not larger");
    }
    Program p(f.universe(), {});
    const Mask all = f.full();
    for (Mask q = 0; q <= all; ++q) {
        Mask image = f(all & ~q);
        for (AtomId a = 0; a < f.atom_count(); ++a) {
            if ((image >> a) & 1u) p.add(Clause{a, {}, AtomSet::from_mask(q)});
        }
    }
    return p;
}

std::optional<Mask> verify_operator_realization(const OperatorTable& f) {
    Program p = program_from_operator(f);
    for (Mask x = 0; x <= f.full(); ++x) {
        if (gl_operator(p, AtomSet::from_mask(x)).to_mask() != f(x)) return x;
    }
    return std::nullopt;
}

namespace {

Universe letters(std::size_t atoms) {
    Universe u;
    for (std::size_t i = 0; i < atoms; ++i) u.intern(std::string(1, static_cast<char>('a' + i)));
    return u;
}

} // namespace

std::vector<OperatorTable> all_antimonotone_tables(std::size_t atoms) {
    if (atoms > 3) throw Error(ErrorCode::TooManyAtoms, "exhaustive table generation is limited to 3 atoms");
    const Universe u = letters(atoms);
    const Mask full = static_cast<Mask>((1u << atoms) - 1);
    const std::size_t n = std::size_t{1} << atoms;
    std::vector<OperatorTable> out;
    std::vector<Mask> entries(n);
    // Masks are filled in increasing order, so every proper subset of x is
    // assigned before x and bounds its image from above.
    auto fill = [&](auto&& self, Mask x) -> void {
        if (x == n) {
            out.emplace_back(u, entries);
            return;
        }
        Mask bound = full;
        for (Mask y = 0; y < x; ++y) {
            if ((y & x) == y) bound &= entries[y];
        }
        for (Mask v = 0; v <= full; ++v) {
            if ((v & bound) != v) continue;
            entries[x] = v;
            self(self, x + 1);
        }
    };
    fill(fill, 0);
    return out;
}

OperatorTable random_antimonotone_table(std::size_t atoms, std::mt19937_64& rng, std::size_t rounds) {
    const Universe u = letters(atoms);
    const Mask full = static_cast<Mask>((1u << atoms) - 1);
    std::vector<Mask> entries(std::size_t{1} << atoms, full);
    if (atoms > 0) {
        std::uniform_int_distribution<Mask> pick_set(0, full);
        std::uniform_int_distribution<AtomId> pick_atom(0, static_cast<AtomId>(atoms - 1));
        for (std::size_t r = 0; r < rounds; ++r) {
            Mask x = pick_set(rng);
            Mask drop = Mask{1} << pick_atom(rng);
            for (Mask y = 0; y <= full; ++y) {
                if ((x & y) == x) entries[y] &= ~drop;
            }
        }
    }
    OperatorTable t(u, std::move(entries));
    if (check_antimonotone(t)) throw std::logic_error("generated table is not antimonotone");
    return t;
}

bool check_lower_half_continuity(const Program& p, const std::vector<Interpretation>& chain) {
    if (chain.empty()) throw Error(ErrorCode::InvalidArgument, "chain must not be empty");
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!chain[i].subset_of(chain[i - 1])) {
            throw Error(ErrorCode::NotDecreasing, "chain element " + std::to_string(i + 1) +
                                                      " is not contained in its predecessor");
        }
    }
    Interpretation meet = chain.front();
    Interpretation join;
    for (const auto& x : chain) {
        meet = meet.intersect(x);
        join = join.unite(gl_operator(p, x));
    }
    return gl_operator(p, meet) == join;
}

Program family_program(Family fam, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "family size must be at least 1");
    Universe u;
    AtomId head = u.intern("p");
    for (std::size_t i = 1; i <= n; ++i) u.intern("p" + std::to_string(i));
    Program p(std::move(u), {});
    for (AtomId i = 1; i <= n; ++i) {
        AtomSet neg;
        if (fam == Family::E2) {
            neg.insert(i);
        } else {
            for (AtomId j = 1; j <= i; ++j) neg.insert(j);
        }
        p.add(Clause{head, {}, std::move(neg)});
    }
    return p;
}

std::optional<Family> parse_family(const std::string& name) {
    if (name == "e2") return Family::E2;
    if (name == "ex3") return Family::Ex3;
    return std::nullopt;
}

std::string family_name(Family fam) { return fam == Family::E2 ? "e2" : "ex3"; }

FspProbe fsp_growth_probe(Family fam, std::size_t n_max) {
    if (n_max == 0) throw Error(ErrorCode::InvalidArgument, "n_max must be at least 1");
    FspProbe probe;
    for (std::size_t n = 1; n <= n_max; ++n) {
        probe.counts.emplace_back(n, fsp_report(family_program(fam, n)).at(0));
    }
    probe.tag = probe.counts.back().second > probe.counts.front().second ? "growing" : "bounded";
    return probe;
}

} // namespace lps
