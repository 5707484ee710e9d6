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

#include "lps/fixpoint.hpp"

#include "lps/error.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace lps {

namespace {

void require_horn(const Program& p) {
    for (std::size_t i = 0; i < p.clauses().size(); ++i) {
        if (!p.clauses()[i].is_horn()) {
            throw Error(ErrorCode::NotHorn, "clause " + std::to_string(i + 1) + " '" +
                                                format_clause(p.universe(), p.clauses()[i]) +
                                                "' has a negative literal");
        }
    }
}

template <class Step>
Interpretation iterate_from_empty(std::size_t universe_size, Step step) {
    Interpretation cur;
    for (std::size_t i = 0; i <= universe_size + 1; ++i) {
        Interpretation next = step(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    assert(false && "fixpoint iteration did not converge");
    return cur;
}

} // namespace

Interpretation tp_step(const Program& horn, const Interpretation& in) {
    require_horn(horn);
    std::vector<AtomId> out;
    for (const auto& c : horn.clauses()) {
        if (c.pos.subset_of(in)) out.push_back(c.head);
    }
    return AtomSet(std::move(out));
}

Interpretation least_model(const Program& horn) {
    require_horn(horn);
    return iterate_from_empty(horn.atom_count(), [&](const Interpretation& i) { return tp_step(horn, i); });
}

Interpretation tpm_step(const Program& p, const Interpretation& m, const Interpretation& in) {
    std::vector<AtomId> out;
    for (const auto& c : p.clauses()) {
        if (c.pos.subset_of(in) && !c.neg.intersects(m)) out.push_back(c.head);
    }
    return AtomSet(std::move(out));
}

Interpretation tpm_lfp(const Program& p, const Interpretation& m) {
    return iterate_from_empty(p.atom_count(), [&](const Interpretation& i) { return tpm_step(p, m, i); });
}

Program gl_reduct(const Program& p, const Interpretation& m) {
    std::vector<Clause> kept;
    for (const auto& c : p.clauses()) {
        if (c.neg.intersects(m)) continue;
        kept.push_back(Clause{c.head, c.pos, {}});
    }
    return Program(p.universe(), std::move(kept));
}

Interpretation gl_operator(const Program& p, const Interpretation& m) {
    Interpretation via_reduct = least_model(gl_reduct(p, m));
    if (via_reduct != tpm_lfp(p, m)) {
        throw std::logic_error("GL via reduct disagrees with lfp of T_{P,M}");
    }
    return via_reduct;
}

bool is_stable_model(const Program& p, const Interpretation& m) { return gl_operator(p, m) == m; }

std::vector<Interpretation> stable_models_bruteforce(const Program& p, std::size_t limit) {
    const std::size_t n = p.atom_count();
    if (n > limit || n >= 63) {
        throw Error(ErrorCode::TooManyAtoms, "brute-force search over " + std::to_string(n) +
                                                 " atoms exceeds the limit of " + std::to_string(limit));
    }
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Interpretation m = AtomSet::from_mask(mask);
        if (is_stable_model(p, m)) out.push_back(std::move(m));
    }
    sort_models(out);
    return out;
}

} // namespace lps
