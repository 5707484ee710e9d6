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

// Command-line front end over the liblps C API.

#include "lps/lps.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct ProgramDeleter {
    void operator()(lps_program* p) const { lps_program_free(p); }
};
struct OptionsDeleter {
    void operator()(lps_options* o) const { lps_options_free(o); }
};
struct OutputDeleter {
    void operator()(lps_output* o) const { lps_output_free(o); }
};
using ProgramPtr = std::unique_ptr<lps_program, ProgramDeleter>;
using OutputPtr = std::unique_ptr<lps_output, OutputDeleter>;

std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int exit_code(lps_status s) {
    if (s == LPS_OK) return kExitOk;
    return lps_status_is_usage(s) ? kExitUsage : kExitDomain;
}

int report_error(lps_status s, const std::string& context) {
    std::cerr << "lps: " << context << ": " << lps_last_error() << " (" << lps_status_name(s) << ")\n";
    return exit_code(s);
}

// Loads a program; returns an exit code on failure.
std::optional<int> load(const std::string& path, bool cc, ProgramPtr& out) {
    auto text = read_input(path);
    if (!text) {
        std::cerr << "lps: cannot read '" << path << "'\n";
        return kExitUsage;
    }
    lps_program* raw = nullptr;
    lps_status s = cc ? lps_cc_program_parse(text->c_str(), &raw) : lps_program_parse(text->c_str(), &raw);
    if (s != LPS_OK) return report_error(s, path);
    out.reset(raw);
    return std::nullopt;
}

// Prints the report (even a partial one) and maps the status to an exit code.
int finish(lps_status s, lps_output* raw, const std::string& context) {
    OutputPtr out(raw);
    if (out) {
        std::cout << lps_output_text(out.get());
        std::string warnings = lps_output_warnings(out.get());
        if (!warnings.empty()) std::cerr << "lps: warning: " << warnings;
    }
    if (s != LPS_OK) return report_error(s, context);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable models through proof schemes and defining equations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::size_t max_atoms = 20;
    std::uint64_t timeout_ms = 0;
    std::uint64_t seed = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-atoms", max_atoms, "Atom limit for exhaustive sweeps");
    app.add_option("--timeout-ms", timeout_ms, "Model enumeration timeout (0 = none)");
    app.add_option("--seed", seed, "Seed for randomized lab runs");

    std::string file;
    std::string method = "equations";
    std::string model;
    std::string atom;
    std::size_t max_steps = 4;
    bool minimal = false;
    bool full = false;
    std::string cnf_path;

    auto* solve = app.add_subcommand("solve", "Compute stable models");
    solve->add_option("file", file, "Program file or - for stdin")->required();
    solve->add_option("--method", method, "equations|bruteforce|schemes|both")
        ->check(CLI::IsMember({"equations", "bruteforce", "schemes", "both"}));

    auto* check = app.add_subcommand("check", "Check whether a set of atoms is a stable model");
    check->add_option("file", file)->required();
    check->add_option("--model", model, "Comma-separated atoms")->required();

    auto* reduct = app.add_subcommand("reduct", "Print the GL reduct");
    reduct->add_option("file", file)->required();
    reduct->add_option("--model", model, "Comma-separated atoms")->required();

    auto* schemes = app.add_subcommand("schemes", "Enumerate irredundant proof schemes");
    schemes->add_option("file", file)->required();
    schemes->add_option("--atom", atom, "Conclusion")->required();
    schemes->add_option("--max", max_steps, "Maximum scheme length")->check(CLI::PositiveNumber);

    auto* supports = app.add_subcommand("supports", "Print the support family");
    supports->add_option("file", file)->required();
    auto* min_flag = supports->add_flag("--minimal", minimal, "Inclusion-minimal supports only");
    supports->add_flag("--full", full, "Every support (default)")->excludes(min_flag);

    auto* equations = app.add_subcommand("equations", "Print the defining equations");
    equations->add_option("file", file)->required();
    equations->add_flag("--full", full, "Non-reduced equations");
    equations->add_flag("--minimal", minimal, "Reduced equations (default)");
    equations->add_option("--export-cnf", cnf_path, "Write the clausal translation in DIMACS form");

    auto* lab = app.add_subcommand("lab", "Operator experiments");
    lab->require_subcommand(1);
    std::size_t lab_atoms = 3;
    bool exhaustive = false;
    std::size_t samples = 100;
    auto* realize = lab->add_subcommand("realize", "Realize antimonotone tables as programs");
    realize->add_option("--atoms", lab_atoms, "Universe size (at most 5)");
    realize->add_flag("--exhaustive", exhaustive, "Enumerate every table (at most 3 atoms)");
    realize->add_option("--samples", samples, "Random tables when not exhaustive");
    std::string family = "e2";
    std::size_t fsp_to = 6;
    auto* fsp = lab->add_subcommand("fsp", "Minimal-support growth over a program family");
    fsp->add_option("--family", family, "e2|ex3")->check(CLI::IsMember({"e2", "ex3"}));
    fsp->add_option("--to", fsp_to, "Largest family size")->check(CLI::PositiveNumber);
    auto* antimono = lab->add_subcommand("antimono", "Check antimonotonicity of GL for a program");
    antimono->add_option("file", file)->required();

    auto* cc = app.add_subcommand("cc", "Cardinality-constraint programs");
    cc->require_subcommand(1);
    auto* cc_solve = cc->add_subcommand("solve", "Compute CC-stable models");
    cc_solve->add_option("file", file)->required();
    cc_solve->add_option("--method", method, "equations|bruteforce|schemes|both")
        ->check(CLI::IsMember({"equations", "bruteforce", "schemes", "both"}));
    auto* cc_check = cc->add_subcommand("check", "Check a CC-stable model");
    cc_check->add_option("file", file)->required();
    cc_check->add_option("--model", model)->required();
    auto* cc_reduct = cc->add_subcommand("reduct", "Print the NSS reduct");
    cc_reduct->add_option("file", file)->required();
    cc_reduct->add_option("--model", model)->required();
    auto* cc_supports = cc->add_subcommand("supports", "Print CC supports");
    cc_supports->add_option("file", file)->required();
    auto* cc_min_flag = cc_supports->add_flag("--minimal", minimal, "Minimal supports only");
    cc_supports->add_flag("--full", full, "Every support (default)")->excludes(cc_min_flag);
    auto* cc_equations = cc->add_subcommand("equations", "Print CC defining equations");
    cc_equations->add_option("file", file)->required();
    cc_equations->add_flag("--full", full, "Non-reduced equations");
    cc_equations->add_option("--export-cnf", cnf_path, "Write the clausal translation in DIMACS form");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::unique_ptr<lps_options, OptionsDeleter> opts(lps_options_new());
    lps_options_set_format(opts.get(), format == "text" ? LPS_FORMAT_TEXT : LPS_FORMAT_JSON);
    lps_options_set_max_atoms(opts.get(), max_atoms);
    lps_options_set_timeout_ms(opts.get(), timeout_ms);
    lps_options_set_seed(opts.get(), seed);

    auto to_method = [](const std::string& m) {
        if (m == "bruteforce") return LPS_METHOD_BRUTEFORCE;
        if (m == "schemes") return LPS_METHOD_SCHEMES;
        if (m == "both") return LPS_METHOD_BOTH;
        return LPS_METHOD_EQUATIONS;
    };
    const char* cnf = cnf_path.empty() ? nullptr : cnf_path.c_str();

    if (lab->parsed()) {
        lps_output* out = nullptr;
        if (realize->parsed()) {
            lps_status s = lps_lab_realize(opts.get(), lab_atoms, exhaustive ? 1 : 0, samples, &out);
            return finish(s, out, "lab realize");
        }
        if (fsp->parsed()) {
            lps_family fam = family == "ex3" ? LPS_FAMILY_EX3 : LPS_FAMILY_E2;
            lps_status s = lps_lab_fsp(opts.get(), fam, fsp_to, &out);
            return finish(s, out, "lab fsp");
        }
        ProgramPtr prog;
        if (auto rc = load(file, false, prog)) return *rc;
        lps_status s = lps_lab_antimono(prog.get(), opts.get(), &out);
        return finish(s, out, file);
    }

    const bool is_cc = cc->parsed();
    ProgramPtr prog;
    if (auto rc = load(file, is_cc, prog)) return *rc;
    lps_output* out = nullptr;
    lps_status s = LPS_OK;
    if (solve->parsed() || (is_cc && cc_solve->parsed())) {
        s = lps_solve(prog.get(), opts.get(), to_method(method), &out);
    } else if (check->parsed() || (is_cc && cc_check->parsed())) {
        s = lps_check(prog.get(), opts.get(), model.c_str(), &out);
    } else if (reduct->parsed() || (is_cc && cc_reduct->parsed())) {
        s = lps_reduct(prog.get(), opts.get(), model.c_str(), &out);
    } else if (schemes->parsed()) {
        s = lps_schemes(prog.get(), opts.get(), atom.c_str(), max_steps, &out);
    } else if (supports->parsed() || (is_cc && cc_supports->parsed())) {
        s = lps_supports(prog.get(), opts.get(), minimal ? 1 : 0, &out);
    } else if (equations->parsed() || (is_cc && cc_equations->parsed())) {
        s = lps_equations(prog.get(), opts.get(), full ? 0 : 1, cnf, &out);
    }
    return finish(s, out, file);
}
