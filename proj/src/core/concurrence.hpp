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

// Bipartite concurrences of three- and four-qubit pure states.

#pragma once

#include <array>
#include <string_view>

#include "quantum_state.hpp"

namespace tetrafill {

/// Factor applied to the squared I-concurrence of a two-two cut. The
/// maximally mixed 4-dim reduction has 2(1 - 1/4) = 3/2, so 2/3 maps it to 1.
inline constexpr double kTwoToOtherNormalization = 2.0 / 3.0;

/// Margin tolerance for the simplex, triangle and monogamy verifiers.
inline constexpr double kInequalityTol = 1e-9;

/// The two-two cuts in profile order: 12|34, 13|24, 14|23.
inline constexpr std::array<std::array<int, 2>, 3> kTwoTwoCuts = {{{1, 2}, {1, 3}, {1, 4}}};
inline constexpr std::array<std::string_view, 3> kTwoTwoLabels = {"12|34", "13|24", "14|23"};

/// Unordered qubit pairs in canonical order 12, 13, 14, 23, 24, 34.
inline constexpr std::array<std::array<int, 2>, 6> kQubitPairs = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

/// Index of {i, j} (1-based, either order) into kQubitPairs.
int pair_index(int i, int j);

struct ConcurrenceProfile {
    /// C^2_{i(jkl)} for i = 1..4.
    std::array<double, 4> one_to_other{};
    /// Normalized C^2_{(ij)(kl)} in kTwoTwoCuts order.
    std::array<double, 3> two_to_other{};
};

struct PairwiseConcurrences {
    /// Wootters C^2_ij in kQubitPairs order.
    std::array<double, 6> values{};
};

/// 2 (1 - Tr rho_left^2); lies in [0, 2(1 - 1/d)] with d the smaller side's
/// dimension.
double squared_i_concurrence(const PureState &state, const Bipartition &cut);

/// Throws DimensionMismatch unless the state has four qubits. A factor other
/// than kTwoToOtherNormalization is only meaningful for normalization studies;
/// entries are then clamped to [0, 3/2 * factor] instead of [0, 1].
ConcurrenceProfile concurrence_profile(const PureState &state,
                                       double two_to_other_factor = kTwoToOtherNormalization);

/// Wootters squared concurrence of a two-qubit density matrix.
double wootters_concurrence_sq(const DensityMatrix &rho);

double pairwise_concurrence_sq(const PureState &state, int i, int j);
PairwiseConcurrences pairwise_concurrences(const PureState &state);

struct SimplexReport {
    bool holds = false;
    /// margins[i] = (sum of the other three faces) - face i.
    std::array<double, 4> margins{};
    double worst_margin = 0.0;
};

SimplexReport check_simplex_inequality(const ConcurrenceProfile &profile);

struct TriangleReport {
    bool holds = false;
    std::array<double, 3> margins{};
    double worst_margin = 0.0;
};

/// Squared triangle inequality for a three-qubit pure state.
TriangleReport check_triangle_inequality(const PureState &state);

/// The three C^2_{i(jk)} of a three-qubit pure state.
std::array<double, 3> one_to_other_3(const PureState &state);

struct MonogamyReport {
    bool holds = false;
    /// slack[i] = C^2_{i(jkl)} - sum_j C^2_ij.
    std::array<double, 4> slack{};
};

MonogamyReport check_monogamy(const PureState &state);

}  // namespace tetrafill
