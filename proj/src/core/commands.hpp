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

// The work behind the CLI subcommands: state comparison, ensemble property
// suites and geometry export.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"
#include "json_io.hpp"

namespace tetrafill {

struct CompareRow {
    std::string measure;
    double a = 0.0;
    double b = 0.0;
    char symbol = '=';
};

/// Rows for F4, GMC and GBC; the symbol is '=' within `tol`.
std::vector<CompareRow> compare(const PureState &a, const PureState &b, const SolverOptions &options = {},
                                double tol = 1e-6);

enum class TableFormat { JSON, TSV };

TableFormat parse_table_format(std::string_view name);
std::string format_compare(const std::vector<CompareRow> &rows, TableFormat format);

/// Number of seeded biseparable families: four one-to-other cuts, three
/// two-two cuts, six one-one-two splits and the fully product state.
inline constexpr int kBiseparableFamilies = 14;

/// A random member of family `family % kBiseparableFamilies`.
PureState biseparable_sample(int family, std::uint64_t seed);

enum class VerifySuite { Simplex, Monogamy, Uniqueness, Invariance, Genuine };

VerifySuite parse_suite(std::string_view name);
std::string_view to_string(VerifySuite suite);

struct VerifyOptions {
    int samples = 1000;
    std::uint64_t seed = 0;
    /// Starts per state for the uniqueness suite.
    int restarts = 10;
    /// Random single-qubit unitaries per state for the invariance suite.
    int unitaries = 50;
    /// 0 uses the hardware concurrency.
    int threads = 0;
    SolverOptions solver;
};

struct VerifySummary {
    VerifySuite suite = VerifySuite::Simplex;
    int samples = 0;
    int passed = 0;
    int failed = 0;
    /// Suite-specific worst value (see `worst_label`) and where it occurred.
    double worst = 0.0;
    std::string worst_label;
    int worst_sample = -1;
    /// For the genuine suite: largest biseparable F4 and smallest Haar F4.
    double max_biseparable_f4 = 0.0;
    double min_genuine_f4 = 0.0;
    std::vector<int> offending_samples;
    std::vector<std::uint64_t> offending_seeds;
    std::vector<std::string> errors;
};

/// Sample i uses derive_seed(options.seed, i). Samples run on worker threads;
/// the summary only depends on the options.
VerifySummary run_verify(VerifySuite suite, const VerifyOptions &options);
Json verify_to_json(const VerifySummary &summary);

/// Solves, embeds and exports the tetrahedron of a 4-qubit state.
std::string export_geometry(const PureState &state, MeshFormat format, const SolverOptions &options = {});

}  // namespace tetrafill
