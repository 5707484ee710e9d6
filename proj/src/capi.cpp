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

#include "lps/lps.h"

#include "lps/cc.hpp"
#include "lps/equations.hpp"
#include "lps/error.hpp"
#include "lps/fixpoint.hpp"
#include "lps/oplab.hpp"
#include "lps/schemes.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <variant>

struct lps_program {
    std::variant<lps::Program, lps::CCProgram> value;
};

struct lps_options {
    lps_format format = LPS_FORMAT_JSON;
    std::size_t max_atoms = lps::kDefaultBruteforceLimit;
    std::uint64_t timeout_ms = 0;
    std::uint64_t seed = 1;
};

struct lps_output {
    std::string text;
    std::string warnings;
};

namespace {

using json = nlohmann::ordered_json;
using namespace lps;

thread_local std::string g_last_error;

lps_status status_of(ErrorCode code) {
    switch (code) {
    case ErrorCode::Syntax: return LPS_ERR_SYNTAX;
    case ErrorCode::CompoundHead: return LPS_ERR_COMPOUND_HEAD;
    case ErrorCode::TooManyAtoms: return LPS_ERR_TOO_MANY_ATOMS;
    case ErrorCode::SupportExplosion: return LPS_ERR_SUPPORT_EXPLOSION;
    case ErrorCode::Timeout: return LPS_ERR_TIMEOUT;
    case ErrorCode::NotHorn:
    case ErrorCode::NotCCHorn: return LPS_ERR_NOT_HORN;
    case ErrorCode::NotPurelyNegative: return LPS_ERR_NOT_PURELY_NEGATIVE;
    case ErrorCode::NotAntimonotone: return LPS_ERR_NOT_ANTIMONOTONE;
    case ErrorCode::NotDecreasing: return LPS_ERR_NOT_DECREASING;
    case ErrorCode::UnknownAtom: return LPS_ERR_UNKNOWN_ATOM;
    case ErrorCode::EqualSets:
    case ErrorCode::InvalidArgument: return LPS_ERR_USAGE;
    }
    return LPS_ERR_INTERNAL;
}

lps_status fail(lps_status s, std::string msg) {
    g_last_error = std::move(msg);
    return s;
}

template <class F>
lps_status guard(F&& body) {
    g_last_error.clear();
    try {
        return body();
    } catch (const Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(LPS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LPS_ERR_INTERNAL, e.what());
    }
}

const lps_options& opts_or_default(const lps_options* o) {
    static const lps_options defaults;
    return o ? *o : defaults;
}

EnumerateOptions enum_opts(const lps_options& o) {
    EnumerateOptions e;
    if (o.timeout_ms > 0) e.timeout = std::chrono::milliseconds(o.timeout_ms);
    return e;
}

const Universe& universe_of(const lps_program& p) {
    return std::visit([](const auto& prog) -> const Universe& { return prog.universe(); }, p.value);
}

json names_json(const Universe& u, const AtomSet& s) { return json(u.names_of(s)); }

json models_json(const Universe& u, const std::vector<Interpretation>& models) {
    json arr = json::array();
    for (const auto& m : models) arr.push_back(names_json(u, m));
    return arr;
}

std::string set_text(const Universe& u, const AtomSet& s) {
    std::string out = "{";
    bool first = true;
    for (AtomId a : s) {
        if (!first) out += ", ";
        first = false;
        out += u.name(a);
    }
    return out + "}";
}

lps_status emit(lps_output** out, std::string text, std::string warnings = {}) {
    if (!text.empty() && text.back() != '\n') text += '\n';
    *out = new lps_output{std::move(text), std::move(warnings)};
    return LPS_OK;
}

std::string join_warnings(const std::vector<std::string>& w) {
    std::string out;
    for (const auto& s : w) out += s + "\n";
    return out;
}

lps_status check_args(const void* a, lps_output** out) {
    if (!a || !out) return fail(LPS_ERR_USAGE, "null argument");
    return LPS_OK;
}

AtomSet indices_to_set(const Universe& u, const size_t* model, size_t count) {
    std::vector<AtomId> ids;
    for (size_t i = 0; i < count; ++i) {
        if (model[i] >= u.size()) throw Error(ErrorCode::UnknownAtom, "atom index out of range");
        ids.push_back(static_cast<AtomId>(model[i]));
    }
    return AtomSet(std::move(ids));
}

// Stable models by one method; `complete` is cleared on timeout.
std::vector<Interpretation> models_by(const lps_program& p, const lps_options& o, lps_method m, bool& complete) {
    if (const auto* np = std::get_if<Program>(&p.value)) {
        switch (m) {
        case LPS_METHOD_BRUTEFORCE: return stable_models_bruteforce(*np, o.max_atoms);
        case LPS_METHOD_SCHEMES: return stable_models_via_schemes(*np, o.max_atoms);
        default: {
            ModelList r = all_models(theory(*np, true), enum_opts(o));
            complete = complete && r.complete;
            return std::move(r.models);
        }
        }
    }
    const auto& cp = std::get<CCProgram>(p.value);
    switch (m) {
    case LPS_METHOD_BRUTEFORCE: return cc_stable_models_bruteforce(cp, o.max_atoms);
    case LPS_METHOD_SCHEMES: {
        const std::size_t n = cp.atom_count();
        if (n > o.max_atoms || n >= 63) {
            throw Error(ErrorCode::TooManyAtoms, "scheme-based search over " + std::to_string(n) +
                                                     " atoms exceeds the limit of " + std::to_string(o.max_atoms));
        }
        CCSupportFamily fam = cc_minimal_supports(cp);
        std::vector<Interpretation> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Interpretation cand = AtomSet::from_mask(mask);
            if (cc_gl_via_schemes(fam, cand) == cand) out.push_back(std::move(cand));
        }
        return out;
    }
    default: {
        ModelList r = all_models(cc_theory(cp, true), enum_opts(o));
        complete = complete && r.complete;
        return std::move(r.models);
    }
    }
}

const char* method_name(lps_method m) {
    switch (m) {
    case LPS_METHOD_EQUATIONS: return "equations";
    case LPS_METHOD_BRUTEFORCE: return "bruteforce";
    case LPS_METHOD_SCHEMES: return "schemes";
    case LPS_METHOD_BOTH: return "both";
    }
    return "?";
}

std::string models_text(const Universe& u, const std::vector<Interpretation>& models) {
    if (models.empty()) return "no stable models\n";
    std::string out;
    for (const auto& m : models) out += set_text(u, m) + "\n";
    return out;
}

} // namespace

extern "C" {

const char* lps_status_name(lps_status status) {
    switch (status) {
    case LPS_OK: return "LPS_OK";
    case LPS_ERR_SYNTAX: return "LPS_ERR_SYNTAX";
    case LPS_ERR_COMPOUND_HEAD: return "LPS_ERR_COMPOUND_HEAD";
    case LPS_ERR_USAGE: return "LPS_ERR_USAGE";
    case LPS_ERR_TOO_MANY_ATOMS: return "LPS_ERR_TOO_MANY_ATOMS";
    case LPS_ERR_SUPPORT_EXPLOSION: return "LPS_ERR_SUPPORT_EXPLOSION";
    case LPS_ERR_TIMEOUT: return "LPS_ERR_TIMEOUT";
    case LPS_ERR_NOT_HORN: return "LPS_ERR_NOT_HORN";
    case LPS_ERR_NOT_PURELY_NEGATIVE: return "LPS_ERR_NOT_PURELY_NEGATIVE";
    case LPS_ERR_NOT_ANTIMONOTONE: return "LPS_ERR_NOT_ANTIMONOTONE";
    case LPS_ERR_NOT_DECREASING: return "LPS_ERR_NOT_DECREASING";
    case LPS_ERR_UNKNOWN_ATOM: return "LPS_ERR_UNKNOWN_ATOM";
    case LPS_ERR_IO: return "LPS_ERR_IO";
    case LPS_ERR_INTERNAL: return "LPS_ERR_INTERNAL";
    }
    return "LPS_ERR_UNKNOWN";
}

const char* lps_last_error(void) { return g_last_error.c_str(); }

int lps_status_is_usage(lps_status s) {
    return s == LPS_ERR_SYNTAX || s == LPS_ERR_COMPOUND_HEAD || s == LPS_ERR_USAGE || s == LPS_ERR_UNKNOWN_ATOM ||
           s == LPS_ERR_IO;
}

lps_status lps_program_parse(const char* text, lps_program** out) {
    if (!text || !out) return fail(LPS_ERR_USAGE, "null argument");
    return guard([&] {
        *out = new lps_program{parse_program(text)};
        return LPS_OK;
    });
}

lps_status lps_cc_program_parse(const char* text, lps_program** out) {
    if (!text || !out) return fail(LPS_ERR_USAGE, "null argument");
    return guard([&] {
        *out = new lps_program{cc_parse(text)};
        return LPS_OK;
    });
}

void lps_program_free(lps_program* program) { delete program; }

int lps_program_is_cc(const lps_program* program) {
    return program && std::holds_alternative<CCProgram>(program->value) ? 1 : 0;
}

size_t lps_program_atom_count(const lps_program* program) { return program ? universe_of(*program).size() : 0; }

const char* lps_program_atom_name(const lps_program* program, size_t index) {
    if (!program) return nullptr;
    const auto& u = universe_of(*program);
    if (index >= u.size()) return nullptr;
    return u.name(static_cast<AtomId>(index)).c_str();
}

lps_status lps_program_gl(const lps_program* program, const size_t* model, size_t model_count, size_t* out,
                          size_t capacity, size_t* out_count) {
    if (!program || (!model && model_count) || (!out && capacity) || !out_count) {
        return fail(LPS_ERR_USAGE, "null argument");
    }
    return guard([&] {
        AtomSet m = indices_to_set(universe_of(*program), model, model_count);
        AtomSet g = std::visit(
            [&](const auto& p) {
                if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Program>) return gl_operator(p, m);
                else return ccgl(p, m);
            },
            program->value);
        *out_count = g.size();
        size_t i = 0;
        for (AtomId a : g) {
            if (i == capacity) break;
            out[i++] = a;
        }
        return LPS_OK;
    });
}

lps_status lps_program_is_stable(const lps_program* program, const size_t* model, size_t model_count, int* stable) {
    if (!program || (!model && model_count) || !stable) return fail(LPS_ERR_USAGE, "null argument");
    return guard([&] {
        AtomSet m = indices_to_set(universe_of(*program), model, model_count);
        bool s = std::visit(
            [&](const auto& p) {
                if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Program>) return is_stable_model(p, m);
                else return is_cc_stable(p, m);
            },
            program->value);
        *stable = s ? 1 : 0;
        return LPS_OK;
    });
}

lps_options* lps_options_new(void) { return new lps_options{}; }
void lps_options_free(lps_options* options) { delete options; }
void lps_options_set_format(lps_options* o, lps_format f) {
    if (o) o->format = f;
}
void lps_options_set_max_atoms(lps_options* o, size_t n) {
    if (o) o->max_atoms = n;
}
void lps_options_set_timeout_ms(lps_options* o, uint64_t ms) {
    if (o) o->timeout_ms = ms;
}
void lps_options_set_seed(lps_options* o, uint64_t seed) {
    if (o) o->seed = seed;
}

const char* lps_output_text(const lps_output* output) { return output ? output->text.c_str() : ""; }
const char* lps_output_warnings(const lps_output* output) { return output ? output->warnings.c_str() : ""; }
void lps_output_free(lps_output* output) { delete output; }

lps_status lps_solve(const lps_program* program, const lps_options* options, lps_method method,
                     lps_output** out) {
    if (lps_status s = check_args(program, out); s != LPS_OK) return s;
    return guard([&] {
        const auto& o = opts_or_default(options);
        const auto& u = universe_of(*program);
        bool complete = true;
        if (method != LPS_METHOD_BOTH) {
            auto models = models_by(*program, o, method, complete);
            if (o.format == LPS_FORMAT_TEXT) {
                emit(out, models_text(u, models) + (complete ? "" : "(incomplete: timed out)\n"));
            } else {
                json j;
                j["models"] = models_json(u, models);
                if (!complete) j["complete"] = false;
                emit(out, j.dump());
            }
            if (!complete) return fail(LPS_ERR_TIMEOUT, "model enumeration timed out; results are partial");
            return LPS_OK;
        }
        std::vector<std::pair<lps_method, std::vector<Interpretation>>> runs;
        for (lps_method m : {LPS_METHOD_BRUTEFORCE, LPS_METHOD_EQUATIONS, LPS_METHOD_SCHEMES}) {
            runs.emplace_back(m, models_by(*program, o, m, complete));
        }
        bool agree = true;
        for (const auto& r : runs) agree = agree && r.second == runs.front().second;
        if (o.format == LPS_FORMAT_TEXT) {
            std::string text;
            for (const auto& [m, models] : runs) {
                text += std::string(method_name(m)) + ":\n" + models_text(u, models);
            }
            text += std::string("agree: ") + (agree ? "true" : "false") + "\n";
            emit(out, text);
        } else {
            json j;
            j["models"] = models_json(u, runs[1].second);
            json methods = json::object();
            for (const auto& [m, models] : runs) methods[method_name(m)] = models_json(u, models);
            j["methods"] = methods;
            j["agree"] = agree;
            if (!complete) j["complete"] = false;
            emit(out, j.dump());
        }
        if (!complete) return fail(LPS_ERR_TIMEOUT, "model enumeration timed out; results are partial");
        return LPS_OK;
    });
}

lps_status lps_check(const lps_program* program, const lps_options* options, const char* model,
                     lps_output** out) {
    if (lps_status s = check_args(program, out); s != LPS_OK) return s;
    if (!model) return fail(LPS_ERR_USAGE, "missing model");
    return guard([&] {
        const auto& o = opts_or_default(options);
        const auto& u = universe_of(*program);
        AtomSet m = u.parse_list(model);
        AtomSet g = std::visit(
            [&](const auto& p) {
                if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Program>) return gl_operator(p, m);
                else return ccgl(p, m);
            },
            program->value);
        bool stable = g == m;
        if (o.format == LPS_FORMAT_TEXT) {
            return emit(out, std::string(stable ? "stable" : "unstable") + "\nGL(M) = " + set_text(u, g));
        }
        json j;
        j["stable"] = stable;
        j["gl"] = names_json(u, g);
        return emit(out, j.dump());
    });
}

lps_status lps_reduct(const lps_program* program, const lps_options* options, const char* model,
                      lps_output** out) {
    if (lps_status s = check_args(program, out); s != LPS_OK) return s;
    if (!model) return fail(LPS_ERR_USAGE, "missing model");
    return guard([&] {
        const auto& o = opts_or_default(options);
        const auto& u = universe_of(*program);
        AtomSet m = u.parse_list(model);
        std::vector<std::string> lines;
        if (const auto* np = std::get_if<Program>(&program->value)) {
            Program r = gl_reduct(*np, m);
            for (const auto& c : r.clauses()) lines.push_back(format_clause(u, c));
        } else {
            CCHornProgram r = nss_reduct(std::get<CCProgram>(program->value), m);
            for (const auto& c : r.clauses) {
                lines.push_back(format_cc_clause(u, c));
            }
        }
        if (o.format == LPS_FORMAT_TEXT) {
            std::string text;
            for (const auto& l : lines) text += l + "\n";
            return emit(out, text);
        }
        json j;
        j["reduct"] = lines;
        return emit(out, j.dump());
    });
}

lps_status lps_schemes(const lps_program* program, const lps_options* options, const char* atom,
                       size_t max_steps, lps_output** out) {
    if (lps_status s = check_args(program, out); s != LPS_OK) return s;
    if (!atom) return fail(LPS_ERR_USAGE, "missing atom");
    const auto* np = std::get_if<Program>(&program->value);
    if (!np) return fail(LPS_ERR_USAGE, "scheme enumeration is available for normal programs only");
    return guard([&] {
        const auto& o = opts_or_default(options);
        const auto& u = np->universe();
        auto schemes = enumerate_schemes(*np, u.at(atom), max_steps);
        if (o.format == LPS_FORMAT_TEXT) {
            std::string text;
            for (const auto& s : schemes) {
                for (const auto& st : s.steps) {
                    text += "<C" + std::to_string(st.clause + 1) + "," + u.name(st.derived) + "> ";
                }
                text += "support " + set_text(u, s.support) + "\n";
            }
            return emit(out, text);
        }
        json arr = json::array();
        for (const auto& s : schemes) {
            json steps = json::array();
            for (const auto& st : s.steps) {
                json step;
                step["clause"] = st.clause + 1;
                step["rule"] = format_clause(u, np->clauses()[st.clause]);
                step["derives"] = u.name(st.derived);
                steps.push_back(step);
            }
            json js;
            js["steps"] = steps;
            js["support"] = names_json(u, s.support);
            arr.push_back(js);
        }
        json j;
        j["atom"] = atom;
        j["schemes"] = arr;
        return emit(out, j.dump());
    });
}

lps_status lps_supports(const lps_program* program, const lps_options* options, int minimal, lps_output** out) {
    if (lps_status s = check_args(program, out); s != LPS_OK) return s;
    return guard([&] {
        const auto& o = opts_or_default(options);
        const auto& u = universe_of(*program);
        // One array of supports per atom, each support an array of strings.
        std::vector<std::vector<std::vector<std::string>>> fam;
        if (const auto* np = std::get_if<Program>(&program->value)) {
            for (const auto& f : minimal ? minimal_supports(*np) : all_supports(*np)) {
                auto& dst = fam.emplace_back();
                for (const auto& s : f) dst.push_back(u.names_of(s));
            }
        } else {
            const auto& cp = std::get<CCProgram>(program->value);
            for (const auto& f : minimal ? cc_minimal_supports(cp) : cc_all_supports(cp)) {
                auto& dst = fam.emplace_back();
                for (const auto& s : f) {
                    auto& items = dst.emplace_back();
                    for (const auto& c : s.items()) items.push_back(format_upper(u, c));
                }
            }
        }
        if (o.format == LPS_FORMAT_TEXT) {
            std::string text;
            for (AtomId a = 0; a < fam.size(); ++a) {
                text += u.name(a) + ":";
                if (fam[a].empty()) text += " none";
                for (const auto& s : fam[a]) {
                    text += " {";
                    for (std::size_t i = 0; i < s.size(); ++i) text += (i ? ", " : "") + s[i];
                    text += "}";
                }
                text += "\n";
            }
            return emit(out, text);
        }
        json j = json::object();
        for (AtomId a = 0; a < fam.size(); ++a) j[u.name(a)] = fam[a];
        return emit(out, j.dump());
    });
}

lps_status lps_equations(const lps_program* program, const lps_options* options, int reduced, const char* cnf_path,
                         lps_output** out) {
    if (lps_status s = check_args(program, out); s != LPS_OK) return s;
    return guard([&] {
        const auto& o = opts_or_default(options);
        const auto& u = universe_of(*program);
        Theory t;
        std::vector<std::string> warnings;
        if (const auto* np = std::get_if<Program>(&program->value)) {
            auto b = build_theory(*np, reduced != 0);
            t = std::move(b.theory);
            warnings = std::move(b.warnings);
        } else {
            auto b = cc_build_theory(std::get<CCProgram>(program->value), reduced != 0);
            t = std::move(b.theory);
            warnings = std::move(b.warnings);
        }
        if (cnf_path) {
            std::ofstream f(cnf_path);
            if (!f) return fail(LPS_ERR_IO, std::string("cannot write '") + cnf_path + "'");
            f << to_dimacs(encode_theory(t));
            if (!f) return fail(LPS_ERR_IO, std::string("cannot write '") + cnf_path + "'");
        }
        std::vector<std::string> lines;
        for (const auto& f : t.formulas) lines.push_back(format_formula(u, f));
        if (o.format == LPS_FORMAT_TEXT) {
            std::string text;
            for (const auto& l : lines) text += l + "\n";
            return emit(out, text, join_warnings(warnings));
        }
        json j;
        j["reduced"] = reduced != 0;
        j["equations"] = lines;
        return emit(out, j.dump(), join_warnings(warnings));
    });
}

lps_status lps_lab_realize(const lps_options* options, size_t atoms, int exhaustive, size_t samples,
                           lps_output** out) {
    if (!out) return fail(LPS_ERR_USAGE, "null argument");
    return guard([&] {
        const auto& o = opts_or_default(options);
        if (atoms > kMaxTableAtoms) {
            return fail(LPS_ERR_TOO_MANY_ATOMS, "operator tables are limited to " + std::to_string(kMaxTableAtoms) +
                                                    " atoms");
        }
        std::vector<OperatorTable> tables;
        if (exhaustive) {
            tables = all_antimonotone_tables(atoms);
        } else {
            std::mt19937_64 rng(o.seed);
            std::uniform_int_distribution<std::size_t> rounds(0, 4 * (atoms + 1));
            for (std::size_t i = 0; i < samples; ++i) {
                tables.push_back(random_antimonotone_table(atoms, rng, rounds(rng)));
            }
        }
        std::size_t failures = 0;
        json first = nullptr;
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (auto bad = verify_operator_realization(tables[i])) {
                if (failures++ == 0) {
                    json f;
                    f["table"] = i;
                    f["subset"] = tables[i].universe().names_of(AtomSet::from_mask(*bad));
                    first = f;
                }
            }
        }
        if (o.format == LPS_FORMAT_TEXT) {
            return emit(out, "atoms " + std::to_string(atoms) + ", " + (exhaustive ? "exhaustive" : "sampled") + ", " +
                                 std::to_string(tables.size()) + " tables, " + std::to_string(failures) +
                                 " failures");
        }
        json j;
        j["atoms"] = atoms;
        j["mode"] = exhaustive ? "exhaustive" : "sampled";
        if (!exhaustive) j["seed"] = o.seed;
        j["tables"] = tables.size();
        j["failures"] = failures;
        j["first_failure"] = first;
        return emit(out, j.dump());
    });
}

lps_status lps_lab_fsp(const lps_options* options, lps_family family, size_t n_max, lps_output** out) {
    if (!out) return fail(LPS_ERR_USAGE, "null argument");
    return guard([&] {
        const auto& o = opts_or_default(options);
        Family fam = family == LPS_FAMILY_E2 ? Family::E2 : Family::Ex3;
        FspProbe probe = fsp_growth_probe(fam, n_max);
        Program last = family_program(fam, n_max);
        std::string eq = format_formula(last.universe(), defining_equation(last, 0, true).formula());
        if (o.format == LPS_FORMAT_TEXT) {
            std::string text = "family " + family_name(fam) + "\n";
            for (const auto& [n, c] : probe.counts) text += "n=" + std::to_string(n) + " supports=" + std::to_string(c) + "\n";
            text += "tag: " + probe.tag + "\nreduced equation at n=" + std::to_string(n_max) + ": " + eq + "\n";
            return emit(out, text);
        }
        json counts = json::array();
        for (const auto& [n, c] : probe.counts) counts.push_back(json{{"n", n}, {"supports", c}});
        json j;
        j["family"] = family_name(fam);
        j["counts"] = counts;
        j["tag"] = probe.tag;
        j["equation"] = eq;
        return emit(out, j.dump());
    });
}

lps_status lps_lab_antimono(const lps_program* program, const lps_options* options, lps_output** out) {
    if (lps_status s = check_args(program, out); s != LPS_OK) return s;
    const auto* np = std::get_if<Program>(&program->value);
    if (!np) return fail(LPS_ERR_USAGE, "operator tables are available for normal programs only");
    return guard([&] {
        const auto& o = opts_or_default(options);
        OperatorTable t = gl_table(*np);
        auto w = check_antimonotone(t);
        const auto& u = np->universe();
        if (o.format == LPS_FORMAT_TEXT) {
            if (!w) return emit(out, "antimonotone");
            return emit(out, "not antimonotone: " + set_text(u, AtomSet::from_mask(w->smaller)) + " within " +
                                 set_text(u, AtomSet::from_mask(w->larger)));
        }
        json j;
        j["antimonotone"] = !w.has_value();
        if (w) {
            j["witness"] = json{{"smaller", u.names_of(AtomSet::from_mask(w->smaller))},
                                {"larger", u.names_of(AtomSet::from_mask(w->larger))}};
        }
        return emit(out, j.dump());
    });
}

} // extern "C"
