// Copyright 2026 The tetrafill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tetrafill command-line tool.
//
// Exit codes: 0 success, 1 usage or parse error, 2 numerical failure,
// 3 property-suite failure.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tetrafill/tetrafill.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitSuite = 3;

struct Failure {
    int exit_code;
    std::string message;
};

int exit_code_for(tf_status status) {
    switch (status) {
        case TF_ERR_NON_CONVERGENCE:
        case TF_ERR_INFEASIBLE_PROFILE:
        case TF_ERR_INTERNAL_CONSISTENCY:
        case TF_ERR_UNKNOWN:
            return kExitNumerical;
        default:
            return kExitUsage;
    }
}

void check(tf_status status) {
    if (status != TF_OK) {
        throw Failure{exit_code_for(status), std::string(tf_status_name(status)) + ": " + tf_last_error()};
    }
}

struct StateDeleter {
    void operator()(tf_state *s) const { tf_state_free(s); }
};
struct MixedDeleter {
    void operator()(tf_mixed_state *s) const { tf_mixed_free(s); }
};
struct StringDeleter {
    void operator()(char *s) const { tf_string_free(s); }
};
using StatePtr = std::unique_ptr<tf_state, StateDeleter>;
using MixedPtr = std::unique_ptr<tf_mixed_state, MixedDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kExitUsage, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Failure{kExitUsage, "cannot write " + path};
}

StatePtr load_named(const std::string &name) {
    tf_state *s = nullptr;
    check(tf_state_named(name.c_str(), &s));
    return StatePtr(s);
}

StatePtr load_file(const std::string &path) {
    tf_state *s = nullptr;
    check(tf_state_from_json(read_file(path).c_str(), &s));
    return StatePtr(s);
}

StatePtr load_state(const std::string &named, const std::string &path) {
    if (named.empty() == path.empty()) throw Failure{kExitUsage, "give exactly one of --named or --state"};
    return named.empty() ? load_file(path) : load_named(named);
}

// A compare operand is a file path if one exists, otherwise a state name.
StatePtr load_operand(const std::string &arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return load_file(arg);
    return load_named(arg);
}

StatePtr require_four_qubits(StatePtr s) {
    if (tf_state_qubits(s.get()) != 4) throw Failure{kExitUsage, "this command needs a 4-qubit state"};
    return s;
}

void add_solver_flags(CLI::App *cmd, tf_solver_options &o) {
    cmd->add_option("--tol", o.tol, "Newton residual tolerance")->check(CLI::Range(1e-15, 1e-3));
    cmd->add_option("--max-iter", o.max_iter, "Newton iterations per start")->check(CLI::PositiveNumber);
    cmd->add_option("--restarts", o.restarts, "Randomized restarts")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", o.seed, "Seed for randomized starts");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Concurrence-tetrahedron entanglement measures for four qubits"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tf_version()));

    std::string named;
    std::string state_path;
    std::string out_path;
    std::string format;
    tf_solver_options solver = tf_solver_options_default();

    auto *measure = app.add_subcommand("measure", "Measure a 4-qubit pure state");
    measure->add_option("--named", named, "Named state (ghz4, cluster4, w4, ...)");
    measure->add_option("--state", state_path, "State JSON file");
    measure->add_option("--out", out_path, "Output file (default stdout)");
    measure->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));
    add_solver_flags(measure, solver);

    std::string operand_a;
    std::string operand_b;
    auto *compare = app.add_subcommand("compare", "Rank two states under F4, GMC and GBC");
    compare->add_option("A", operand_a, "State name or JSON file")->required();
    compare->add_option("B", operand_b, "State name or JSON file")->required();
    compare->add_option("--out", out_path, "Output file (default stdout)");
    compare->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    add_solver_flags(compare, solver);

    std::string suite;
    tf_verify_options verify_opts = tf_verify_options_default();
    auto *verify = app.add_subcommand("verify", "Run a property suite over seeded random states");
    verify->add_option("--suite", suite, "simplex, monogamy, uniqueness, invariance or genuine")
        ->required()
        ->check(CLI::IsMember({"simplex", "monogamy", "uniqueness", "invariance", "genuine"}));
    verify->add_option("-n,--samples", verify_opts.samples, "Number of samples")->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_opts.seed, "Base seed");
    verify->add_option("--restarts", verify_opts.restarts, "Starts per state (uniqueness)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--unitaries", verify_opts.unitaries, "Local unitaries per state (invariance)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--threads", verify_opts.threads, "Worker threads (0: all cores)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--tol", verify_opts.solver.tol, "Newton residual tolerance")
        ->check(CLI::Range(1e-15, 1e-3));
    verify->add_option("--out", out_path, "Output file (default stdout)");

    auto *geometry = app.add_subcommand("export-geometry", "Export the tetrahedron of a state as a mesh");
    geometry->add_option("--named", named, "Named state");
    geometry->add_option("--state", state_path, "State JSON file");
    geometry->add_option("--out", out_path, "Output file (default stdout)");
    geometry->add_option("--format", format, "obj or json")->check(CLI::IsMember({"obj", "json"}));
    add_solver_flags(geometry, solver);

    std::string rho_path;
    tf_convex_roof_options roof = tf_convex_roof_options_default();
    auto *convex = app.add_subcommand("convex-roof", "Upper bound on F4 of a mixed state");
    convex->add_option("--rho", rho_path, "Density matrix JSON file")->required();
    convex->add_option("--ensemble-size", roof.ensemble_size, "Decomposition size (0: automatic)")
        ->check(CLI::NonNegativeNumber);
    convex->add_option("--budget", roof.budget, "Rotation steps per start")->check(CLI::NonNegativeNumber);
    convex->add_option("--starts", roof.starts, "Independent starts")->check(CLI::PositiveNumber);
    convex->add_option("--seed", roof.seed, "Seed");
    convex->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*measure) {
            StatePtr s = require_four_qubits(load_state(named, state_path));
            char *json = nullptr;
            check(tf_measure_json(s.get(), &solver, &json));
            write_output(StringPtr(json).get(), out_path);
        } else if (*compare) {
            StatePtr a = require_four_qubits(load_operand(operand_a));
            StatePtr b = require_four_qubits(load_operand(operand_b));
            char *table = nullptr;
            check(tf_compare(a.get(), b.get(), &solver, format.empty() ? "json" : format.c_str(), &table));
            write_output(StringPtr(table).get(), out_path);
        } else if (*verify) {
            char *json = nullptr;
            int failed = 0;
            check(tf_verify(suite.c_str(), &verify_opts, &json, &failed));
            write_output(StringPtr(json).get(), out_path);
            if (failed > 0) {
                std::cerr << "verify: " << failed << " of " << verify_opts.samples << " samples failed\n";
                return kExitSuite;
            }
        } else if (*geometry) {
            StatePtr s = require_four_qubits(load_state(named, state_path));
            char *mesh = nullptr;
            check(tf_export_geometry(s.get(), format.empty() ? "obj" : format.c_str(), &solver, &mesh));
            write_output(StringPtr(mesh).get(), out_path);
        } else if (*convex) {
            tf_mixed_state *m = nullptr;
            check(tf_mixed_from_json(read_file(rho_path).c_str(), &m));
            MixedPtr rho(m);
            char *json = nullptr;
            check(tf_convex_roof(rho.get(), &roof, nullptr, &json));
            write_output(StringPtr(json).get(), out_path);
        }
    } catch (const Failure &f) {
        std::cerr << "tetrafill: " << f.message << "\n";
        return f.exit_code;
    }
    return 0;
}
