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

#include <vector>

namespace lps {

inline constexpr std::size_t kDefaultBruteforceLimit = 20;

/// One-step provability T_P(I). Throws Error(NotHorn) on a negative literal.
Interpretation tp_step(const Program& horn, const Interpretation& in);
/// Least model of a Horn program by iterating T_P from the empty set.
Interpretation least_model(const Program& horn);

/// T_{P,M}(I): heads of clauses with pos ⊆ I and neg ∩ M = ∅.
Interpretation tpm_step(const Program& p, const Interpretation& m, const Interpretation& in);
/// Least fixpoint of T_{P,M}.
Interpretation tpm_lfp(const Program& p, const Interpretation& m);

/// Gelfond-Lifschitz reduct P_M.
Program gl_reduct(const Program& p, const Interpretation& m);
/// GL_P(M) = lm(P_M). Also computes lfp(T_{P,M}) and asserts both agree.
Interpretation gl_operator(const Program& p, const Interpretation& m);
bool is_stable_model(const Program& p, const Interpretation& m);

/// Every M over the universe with GL_P(M) = M, sorted.
/// Throws Error(TooManyAtoms) above `limit` atoms.
std::vector<Interpretation> stable_models_bruteforce(const Program& p,
                                                     std::size_t limit = kDefaultBruteforceLimit);

} // namespace lps
