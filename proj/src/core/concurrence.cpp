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

#include "concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "errors.hpp"

namespace tetrafill {

namespace {

constexpr double kEntryTol = 1e-10;
constexpr double kRoundoffEigenvalue = 1e-14;

double clamp_entry(double value, double upper, const char *what) {
    if (value < -kEntryTol || value > upper + kEntryTol || !std::isfinite(value)) {
        throw Error(ErrorCode::InternalConsistency, std::string(what) + " out of range: " + std::to_string(value));
    }
    return std::clamp(value, 0.0, upper);
}

}  // namespace

int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    for (int k = 0; k < 6; ++k) {
        if (kQubitPairs[k][0] == i && kQubitPairs[k][1] == j) return k;
    }
    throw Error(ErrorCode::InvalidArgument, "invalid qubit pair");
}

double squared_i_concurrence(const PureState &state, const Bipartition &cut) {
    if (cut.n_qubits() != state.n_qubits()) {
        throw Error(ErrorCode::InvalidArgument, "cut does not match the number of qubits");
    }
    // Both sides share their nonzero spectrum; trace out onto the smaller one.
    const auto &side = cut.left().size() <= cut.right().size() ? cut.left() : cut.right();
    return 2.0 * (1.0 - reduced_density(state, side).purity());
}

ConcurrenceProfile concurrence_profile(const PureState &state, double two_to_other_factor) {
    if (state.n_qubits() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "concurrence profile needs a 4-qubit state");
    }
    if (!(two_to_other_factor > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "two-to-other factor must be positive");
    }
    ConcurrenceProfile profile;
    for (int i = 1; i <= 4; ++i) {
        const double c = squared_i_concurrence(state, Bipartition::make(4, {i}));
        profile.one_to_other[i - 1] = clamp_entry(c, 1.0, "one-to-other concurrence");
    }
    for (int k = 0; k < 3; ++k) {
        const auto &pair = kTwoTwoCuts[k];
        const double c = squared_i_concurrence(state, Bipartition::make(4, {pair[0], pair[1]}));
        profile.two_to_other[k] = clamp_entry(two_to_other_factor * c, 1.5 * two_to_other_factor,
                                              "two-to-other concurrence");
    }
    return profile;
}

double wootters_concurrence_sq(const DensityMatrix &rho) {
    if (rho.dim() != 4) throw Error(ErrorCode::DimensionMismatch, "Wootters concurrence needs a two-qubit state");
    // sigma_y (x) sigma_y in the computational basis.
    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    // The lambdas are the singular values of sqrt(rho) Y sqrt(rho)^*, whose
    // Gram matrix is sqrt(rho) rho~ sqrt(rho). Taking singular values avoids
    // square roots of roundoff-level eigenvalues.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> root(rho.matrix());
    Eigen::Vector4d ev = root.eigenvalues();
    for (double &e : ev) e = e < kRoundoffEigenvalue ? 0.0 : std::sqrt(e);
    const Eigen::Matrix4cd sqrt_rho = root.eigenvectors() * ev.asDiagonal() * root.eigenvectors().adjoint();
    const Eigen::Matrix4cd a = sqrt_rho * flip * sqrt_rho.conjugate();
    const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4cd>(a).singularValues();

    std::array<double, 4> mu{};
    for (int k = 0; k < 4; ++k) mu[k] = sv[k];
    std::sort(mu.begin(), mu.end(), std::greater<>());
    const double c = std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
    return std::min(c * c, 1.0);
}

double pairwise_concurrence_sq(const PureState &state, int i, int j) {
    if (state.n_qubits() != 4) throw Error(ErrorCode::DimensionMismatch, "pairwise concurrence needs a 4-qubit state");
    if (i == j) throw Error(ErrorCode::InvalidArgument, "pairwise concurrence needs two distinct qubits");
    const std::array<int, 2> keep = {i, j};
    return wootters_concurrence_sq(reduced_density(state, keep));
}

PairwiseConcurrences pairwise_concurrences(const PureState &state) {
    PairwiseConcurrences out;
    for (int k = 0; k < 6; ++k) out.values[k] = pairwise_concurrence_sq(state, kQubitPairs[k][0], kQubitPairs[k][1]);
    return out;
}

SimplexReport check_simplex_inequality(const ConcurrenceProfile &profile) {
    SimplexReport report;
    double total = 0.0;
    for (double c : profile.one_to_other) total += c;
    for (int i = 0; i < 4; ++i) report.margins[i] = total - 2.0 * profile.one_to_other[i];
    report.worst_margin = *std::min_element(report.margins.begin(), report.margins.end());
    report.holds = report.worst_margin >= -kInequalityTol;
    return report;
}

std::array<double, 3> one_to_other_3(const PureState &state) {
    if (state.n_qubits() != 3) throw Error(ErrorCode::DimensionMismatch, "expected a 3-qubit state");
    std::array<double, 3> c{};
    for (int i = 1; i <= 3; ++i) {
        c[i - 1] = clamp_entry(squared_i_concurrence(state, Bipartition::make(3, {i})), 1.0, "one-to-other concurrence");
    }
    return c;
}

TriangleReport check_triangle_inequality(const PureState &state) {
    const auto c = one_to_other_3(state);
    TriangleReport report;
    const double total = c[0] + c[1] + c[2];
    for (int i = 0; i < 3; ++i) report.margins[i] = total - 2.0 * c[i];
    report.worst_margin = *std::min_element(report.margins.begin(), report.margins.end());
    report.holds = report.worst_margin >= -kInequalityTol;
    return report;
}

MonogamyReport check_monogamy(const PureState &state) {
    const ConcurrenceProfile profile = concurrence_profile(state);
    const PairwiseConcurrences pairs = pairwise_concurrences(state);
    MonogamyReport report;
    report.holds = true;
    for (int i = 1; i <= 4; ++i) {
        double sum = 0.0;
        for (int j = 1; j <= 4; ++j) {
            if (j != i) sum += pairs.values[pair_index(i, j)];
        }
        report.slack[i - 1] = profile.one_to_other[i - 1] - sum;
        if (report.slack[i - 1] < -kInequalityTol) report.holds = false;
    }
    return report;
}

}  // namespace tetrafill
