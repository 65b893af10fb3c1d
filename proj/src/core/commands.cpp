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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <thread>

#include "errors.hpp"

namespace tetrafill {

namespace {

constexpr double kSuiteMarginTol = -1e-9;
constexpr double kMinSigmaTol = -1e-10;
constexpr double kInvarianceTol = 1e-8;
constexpr double kBiseparableF4Max = 1e-8;
constexpr double kGenuineF4Min = 1e-6;

std::string lower(std::string_view s) {
    std::string out(s);
    for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

const std::vector<std::vector<std::vector<int>>> &biseparable_blocks() {
    static const std::vector<std::vector<std::vector<int>>> blocks = {
        {{1}, {2, 3, 4}},
        {{2}, {1, 3, 4}},
        {{3}, {1, 2, 4}},
        {{4}, {1, 2, 3}},
        {{1, 2}, {3, 4}},
        {{1, 3}, {2, 4}},
        {{1, 4}, {2, 3}},
        {{1}, {2}, {3, 4}},
        {{1}, {3}, {2, 4}},
        {{1}, {4}, {2, 3}},
        {{2}, {3}, {1, 4}},
        {{2}, {4}, {1, 3}},
        {{3}, {4}, {1, 2}},
        {{1}, {2}, {3}, {4}},
    };
    return blocks;
}

// Result of one sample. `metric` is the quantity the summary tracks for the
// suite (a margin where smaller is worse, or a deviation where larger is).
struct SampleResult {
    bool pass = true;
    double metric = 0.0;
    double bisep_f4 = 0.0;
    double genuine_f4 = 0.0;
    std::string error;
};

SampleResult verdict(bool pass, double metric) {
    SampleResult r;
    r.pass = pass;
    r.metric = metric;
    return r;
}

double relative_deviation(double value, double reference) {
    const double scale = std::max(std::abs(reference), std::numeric_limits<double>::min());
    return std::abs(value - reference) / scale;
}

SampleResult run_simplex(std::uint64_t seed) {
    const SimplexReport r = check_simplex_inequality(concurrence_profile(haar_random_state(4, seed)));
    return verdict(r.worst_margin >= kSuiteMarginTol, r.worst_margin);
}

SampleResult run_monogamy(std::uint64_t seed) {
    const MonogamyReport r = check_monogamy(haar_random_state(4, seed));
    const double worst = *std::min_element(r.slack.begin(), r.slack.end());
    return verdict(worst >= kSuiteMarginTol, worst);
}

SampleResult run_uniqueness(std::uint64_t seed, const VerifyOptions &options) {
    const ConcurrenceProfile profile = concurrence_profile(haar_random_state(4, seed));
    const UniquenessReport r = verify_uniqueness(profile, options.restarts, derive_seed(seed, 1), options.solver);
    SampleResult out;
    out.metric = r.max_spread;
    out.pass = r.all_converged_same && r.max_spread < kUniquenessTol && r.min_sigma >= kMinSigmaTol;
    return out;
}

SampleResult run_invariance(std::uint64_t seed, const VerifyOptions &options) {
    const PureState state = haar_random_state(4, seed);
    const MeasureReport base = measure(state, options.solver);
    double worst = 0.0;
    auto check = [&](const PureState &other) {
        const MeasureReport r = measure(other, options.solver);
        worst = std::max({worst, relative_deviation(r.f4, base.f4), relative_deviation(r.gmc, base.gmc),
                          relative_deviation(r.gbc, base.gbc)});
    };
    std::array<int, 4> perm = {1, 2, 3, 4};
    do {
        check(permute_qubits(state, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::mt19937_64 rng(derive_seed(seed, 1));
    std::uniform_int_distribution<int> qubit(1, 4);
    for (int k = 0; k < options.unitaries; ++k) {
        const Eigen::Matrix2cd u = haar_random_unitary(2, rng());
        check(apply_local_unitary(state, qubit(rng), u));
    }
    return verdict(worst <= kInvarianceTol, worst);
}

SampleResult run_genuine(int index, std::uint64_t seed, const VerifyOptions &options) {
    SampleResult out;
    out.bisep_f4 = concurrence_fill_4(biseparable_sample(index, seed), options.solver);
    out.genuine_f4 = concurrence_fill_4(haar_random_state(4, derive_seed(seed, 1)), options.solver);
    out.pass = out.bisep_f4 < kBiseparableF4Max && out.genuine_f4 > kGenuineF4Min;
    out.metric = out.bisep_f4;
    return out;
}

SampleResult run_sample(VerifySuite suite, int index, std::uint64_t seed, const VerifyOptions &options) {
    switch (suite) {
        case VerifySuite::Simplex:
            return run_simplex(seed);
        case VerifySuite::Monogamy:
            return run_monogamy(seed);
        case VerifySuite::Uniqueness:
            return run_uniqueness(seed, options);
        case VerifySuite::Invariance:
            return run_invariance(seed, options);
        case VerifySuite::Genuine:
            return run_genuine(index, seed, options);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown suite");
}

// Margins are worst when smallest; spreads and deviations when largest.
bool smaller_is_worse(VerifySuite suite) {
    return suite == VerifySuite::Simplex || suite == VerifySuite::Monogamy;
}

std::string_view worst_label(VerifySuite suite) {
    switch (suite) {
        case VerifySuite::Simplex:
            return "min_simplex_margin";
        case VerifySuite::Monogamy:
            return "min_monogamy_slack";
        case VerifySuite::Uniqueness:
            return "max_sigma_spread";
        case VerifySuite::Invariance:
            return "max_relative_deviation";
        case VerifySuite::Genuine:
            return "max_biseparable_f4";
    }
    return "";
}

}  // namespace

std::vector<CompareRow> compare(const PureState &a, const PureState &b, const SolverOptions &options, double tol) {
    const MeasureReport ra = measure(a, options);
    const MeasureReport rb = measure(b, options);
    auto row = [tol](std::string name, double x, double y) {
        CompareRow r{std::move(name), x, y, '='};
        if (x > y + tol) r.symbol = '>';
        if (x < y - tol) r.symbol = '<';
        return r;
    };
    return {row("F4", ra.f4, rb.f4), row("GMC", ra.gmc, rb.gmc), row("GBC", ra.gbc, rb.gbc)};
}

TableFormat parse_table_format(std::string_view name) {
    const std::string s = lower(name);
    if (s == "json") return TableFormat::JSON;
    if (s == "tsv") return TableFormat::TSV;
    throw Error(ErrorCode::Unsupported, "unknown table format: " + std::string(name));
}

std::string format_compare(const std::vector<CompareRow> &rows, TableFormat format) {
    if (format == TableFormat::TSV) {
        std::string out = "measure\tA\tB\trank\n";
        for (const CompareRow &r : rows) {
            out += r.measure + "\t" + format_double(r.a) + "\t" + format_double(r.b) + "\t" + r.symbol + "\n";
        }
        return out;
    }
    Json j = Json::array();
    for (const CompareRow &r : rows) {
        Json row;
        row["measure"] = r.measure;
        row["a"] = r.a;
        row["b"] = r.b;
        row["rank"] = std::string(1, r.symbol);
        j.push_back(std::move(row));
    }
    return dump(j);
}

PureState biseparable_sample(int family, std::uint64_t seed) {
    const auto &blocks = biseparable_blocks();
    const int f = ((family % kBiseparableFamilies) + kBiseparableFamilies) % kBiseparableFamilies;
    return random_partitioned_state(4, blocks[static_cast<std::size_t>(f)], seed);
}

VerifySuite parse_suite(std::string_view name) {
    const std::string s = lower(name);
    if (s == "simplex") return VerifySuite::Simplex;
    if (s == "monogamy") return VerifySuite::Monogamy;
    if (s == "uniqueness") return VerifySuite::Uniqueness;
    if (s == "invariance") return VerifySuite::Invariance;
    if (s == "genuine") return VerifySuite::Genuine;
    throw Error(ErrorCode::Unsupported, "unknown suite: " + std::string(name));
}

std::string_view to_string(VerifySuite suite) {
    switch (suite) {
        case VerifySuite::Simplex:
            return "simplex";
        case VerifySuite::Monogamy:
            return "monogamy";
        case VerifySuite::Uniqueness:
            return "uniqueness";
        case VerifySuite::Invariance:
            return "invariance";
        case VerifySuite::Genuine:
            return "genuine";
    }
    return "unknown";
}

VerifySummary run_verify(VerifySuite suite, const VerifyOptions &options) {
    if (options.samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be >= 1");
    if (options.restarts < 1) throw Error(ErrorCode::InvalidArgument, "restarts must be >= 1");
    if (options.unitaries < 0) throw Error(ErrorCode::InvalidArgument, "unitaries must be >= 0");

    const int n = options.samples;
    std::vector<SampleResult> results(static_cast<std::size_t>(n));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < n; i = next++) {
            const std::uint64_t seed = derive_seed(options.seed, static_cast<std::uint64_t>(i));
            SampleResult &r = results[static_cast<std::size_t>(i)];
            try {
                r = run_sample(suite, i, seed, options);
            } catch (const Error &e) {
                r.pass = false;
                r.metric = std::numeric_limits<double>::quiet_NaN();
                r.error = e.what();
            }
        }
    };
    int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, n);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    VerifySummary s;
    s.suite = suite;
    s.samples = n;
    s.worst_label = worst_label(suite);
    s.worst = smaller_is_worse(suite) ? std::numeric_limits<double>::infinity() : 0.0;
    s.min_genuine_f4 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const SampleResult &r = results[static_cast<std::size_t>(i)];
        if (r.pass) {
            ++s.passed;
        } else {
            ++s.failed;
            s.offending_samples.push_back(i);
            s.offending_seeds.push_back(derive_seed(options.seed, static_cast<std::uint64_t>(i)));
            if (!r.error.empty()) s.errors.push_back("sample " + std::to_string(i) + ": " + r.error);
        }
        if (!r.error.empty()) continue;
        const bool worse = smaller_is_worse(suite) ? r.metric < s.worst : r.metric > s.worst;
        if (worse || s.worst_sample < 0) {
            s.worst = r.metric;
            s.worst_sample = i;
        }
        if (suite == VerifySuite::Genuine) {
            s.max_biseparable_f4 = std::max(s.max_biseparable_f4, r.bisep_f4);
            s.min_genuine_f4 = std::min(s.min_genuine_f4, r.genuine_f4);
        }
    }
    if (s.worst_sample < 0) s.worst = std::numeric_limits<double>::quiet_NaN();
    if (suite != VerifySuite::Genuine || s.worst_sample < 0) s.min_genuine_f4 = 0.0;
    return s;
}

Json verify_to_json(const VerifySummary &s) {
    Json j;
    j["suite"] = to_string(s.suite);
    j["samples"] = s.samples;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j[s.worst_label] = std::isnan(s.worst) ? Json(nullptr) : Json(s.worst);
    j["worst_sample"] = s.worst_sample;
    if (s.suite == VerifySuite::Genuine) j["min_genuine_f4"] = s.min_genuine_f4;
    j["offending_samples"] = s.offending_samples;
    j["offending_seeds"] = s.offending_seeds;
    j["errors"] = s.errors;
    return j;
}

std::string export_geometry(const PureState &state, MeshFormat format, const SolverOptions &options) {
    const TetraReport report = tetra_report(concurrence_profile(state), options);
    const TetraEmbedding embedding = embed_tetrahedron(report.sigma);
    return export_mesh(embedding, format, {report.volume.V, report.f4, report.degeneracy});
}

}  // namespace tetrafill
